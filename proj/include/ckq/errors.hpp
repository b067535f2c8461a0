#pragma once

#include "ckq/nilpotent.hpp"

#include <stdexcept>
#include <string>

namespace ckq {

/// Thrown when a Pimenov division a / iota... is not defined, i.e. some term
/// of the numerator lacks the divisor as a factor.  The contraction checker
/// treats this as the inadmissibility signal, so the offending monomial and a
/// location string are carried along.
class UndefinedDivision : public std::runtime_error {
public:
    UndefinedDivision(NilMonomial divisor, NilMonomial offending, std::string where)
        : std::runtime_error("undefined division by " + divisor.str() + " at " + where +
                             " (term " + offending.str() + ")"),
          divisor_(divisor),
          offending_(offending),
          where_(std::move(where)) {}

    NilMonomial divisor() const { return divisor_; }
    NilMonomial offending() const { return offending_; }
    const std::string& where() const { return where_; }

private:
    NilMonomial divisor_;
    NilMonomial offending_;
    std::string where_;
};

class NonLinear : public std::runtime_error {
public:
    explicit NonLinear(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckq
