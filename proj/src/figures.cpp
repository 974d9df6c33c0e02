#include "hcf/figures.hpp"

namespace hcf {

namespace {

const Style kSet{"#9ecae1", "#08519c", ""};
const Style kImage{"#fdd0a2", "#a63603", ""};

Style labelled(Style s, const std::string& label) {
    s.label = label;
    return s;
}

Region minus_open(std::vector<GaussianInt> cs) {
    std::vector<Constraint> all = Region::square_closed().constraints();
    for (const auto& c : cs) {
        Region ext = Region::exterior_closed(c);
        for (const auto& k : ext.constraints()) all.push_back(k);
    }
    return Region(all);
}

Region minus_closed(std::vector<GaussianInt> cs) {
    std::vector<Constraint> all = Region::square_open().constraints();
    for (const auto& c : cs) {
        Region ext = Region::exterior_open(c);
        for (const auto& k : ext.constraints()) all.push_back(k);
    }
    return Region(all);
}

std::string pair_figure(const std::vector<GaussianInt>& cs, const std::string& name) {
    return emit_svg(std::vector<std::vector<std::pair<Region, Style>>>{
        {{minus_closed(cs), labelled(kSet, "F° \\ " + name)}},
        {{invert(minus_open(cs), true), labelled(kImage, "ι[closure \\ " + name + "]")}},
    });
}

std::string forms_figure(const Symmetry& s) {
    std::vector<std::vector<std::pair<Region, Style>>> panels;
    const char* tags[] = {"(a)", "(b)", "(c)", "(d)"};
    const auto& ws = algorithm_form_words();
    for (size_t k = 0; k < ws.size(); ++k) {
        Word w = apply_symmetry(s, ws[k]);
        Region r = apply_symmetry(s, prototype_region(ws[k]));
        panels.push_back({{Region::square(), labelled({"none", "#bdbdbd", ""}, "")},
                          {r, labelled(kImage, std::string(tags[k]) + " " + word_str(w))}});
    }
    return emit_svg(panels);
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names{"open-prototypes", "b5ii",    "b5iii",       "b5iv",
                                                "alg-id",          "alg-mir2", "alg-mir1mir2"};
    return names;
}

const std::vector<Word>& algorithm_form_words() {
    static const std::vector<Word> ws{
        {GaussianInt(-1, 1), GaussianInt(-2, 1)},
        {GaussianInt(-2), GaussianInt(1, -3), GaussianInt(-2, 1)},
        {GaussianInt(-2), GaussianInt(1, 2), GaussianInt(-2, 1)},
        {GaussianInt(1, -1), GaussianInt(0, 2), GaussianInt(-2, 1)},
    };
    return ws;
}

std::string plot_figure(const std::string& name) {
    if (name == "open-prototypes")
        return emit_svg(std::vector<std::vector<std::pair<Region, Style>>>{
            {{Region::square_open(), labelled(kSet, "F°")}},
            {{open_prototype_region({GaussianInt(-2)}), labelled(kSet, "F°1(-2)")}},
            {{open_prototype_region({GaussianInt(-2, 1)}), labelled(kSet, "F°1(-2+i)")}},
            {{open_prototype_region({GaussianInt(-1, 1)}), labelled(kSet, "F°1(-1+i)")}},
        });
    if (name == "b5ii") return pair_figure({GaussianInt(1, 1)}, "D(1+i)");
    if (name == "b5iii") return pair_figure({GaussianInt(-1)}, "D(-1)");
    if (name == "b5iv") return pair_figure({GaussianInt(0, 1), GaussianInt(-1)}, "(D(i) ∪ D(-1))");
    if (name == "alg-id") return forms_figure(Symmetry::identity());
    if (name == "alg-mir2") return forms_figure(Symmetry::mir2());
    if (name == "alg-mir1mir2") return forms_figure(Symmetry::mir1().compose(Symmetry::mir2()));
    fail(ErrorKind::UnknownFigure, "unknown figure " + name);
}

}  // namespace hcf
