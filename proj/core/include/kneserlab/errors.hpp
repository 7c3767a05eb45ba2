#ifndef KNESERLAB_ERRORS_HPP
#define KNESERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kneserlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

struct SizeLimit : Error {
    explicit SizeLimit(const std::string& msg) : Error(msg) {}
};

// Thrown when the exact coloring solver runs out of its node budget.
// Carries the bracketing interval established so far.
struct BudgetExceeded : Error {
    int lower;
    int upper; // -1 if no proper coloring was found yet
    BudgetExceeded(const std::string& msg, int lo, int hi)
        : Error(msg), lower(lo), upper(hi) {}
};

} // namespace kneserlab

#endif
