#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hcf/shift.hpp"

namespace hcf {

// Integer sequence B_1, B_2, ... from a JSON rule:
//   {"rule":"power-perturbation","base":3,"alt":4,"power":2}   B_n = alt iff n = power^k
//   {"rule":"fibonacci","values":[3,4]}                        Fibonacci word over two values
//   {"rule":"periodic","values":[3,-4,5]}
//   {"rule":"explicit","values":[...]}                         finite
// periodic and explicit carry no aperiodicity certificate unless "assert_aperiodic": true.
class IntSeq {
public:
    static IntSeq from_json(const json& spec);  // Usage
    long at(size_t n) const;                     // 1-based; HypothesisViolated past an explicit list
    bool certified_aperiodic() const { return certified_; }
    bool user_asserted() const { return asserted_; }
    bool bounded() const { return true; }
    const json& spec() const { return spec_; }

private:
    json spec_;
    std::function<long(size_t)> f_;
    size_t limit_ = 0;  // 0 = unbounded index
    bool certified_ = false;
    bool asserted_ = false;
};

// Fibonacci word bit at n >= 1 (0 or 1), exact.
int fibonacci_bit(size_t n);

struct GenResult {
    DigitSeq seq;
    Word prefix;
    std::vector<std::string> warnings;
};

// (-2, 1+iB_1, -2, 1+iB_2, ...)
DigitSeq example1_sequence(const IntSeq& b);
// Hypotheses: min |B_n| >= 3 on the emitted prefix and an aperiodicity certificate.
GenResult gen_theorem14(const json& b_spec, size_t length);

// b_form: "iB" (default), "B" or "1+iB" selects the digit built from B_n.
GaussianInt b_digit(long b, const std::string& b_form);
// Digits from {2, 2i, -2, -2i}: {"rule":"periodic"|"explicit","values":[[re,im],...]}
DigitSeq a_sequence(const json& a_spec);
// C = s(A, B'), validated by classify on the emitted prefix.
GenResult gen_theorem_new(const json& a_spec, const json& b_spec, size_t length,
                          const std::string& b_form = "iB");

// Word or generator spec as used on the command line:
//   [[re,im],...]                                  finite word
//   {"family":"periodic","pre":[...],"period":[...]}
//   {"family":"example1","B":{...}}
//   {"family":"thm14","B":{...}}
//   {"family":"new","A":{...},"B":{...},"b_form":"iB"}
DigitSeq parse_sequence(const json& j);

}  // namespace hcf
