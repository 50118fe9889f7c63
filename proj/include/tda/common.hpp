#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace tda {

// Error with a short machine-parsable code ("metric", "closure", "io", ...).
// The CLI maps these to `E:<code>: message` on stderr.
class tda_error : public std::runtime_error {
public:
    tda_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

constexpr double infinity = std::numeric_limits<double>::infinity();

// Half-open persistence interval [birth, death); death may be +infinity.
struct interval {
    double birth = 0.0;
    double death = 0.0;

    double length() const { return death - birth; }
    bool finite() const { return death != infinity; }

    friend bool operator==(const interval&, const interval&) = default;
    friend auto operator<=>(const interval& a, const interval& b) {
        if (auto c = a.birth <=> b.birth; c != 0) return c;
        return a.death <=> b.death;
    }
};

} // namespace tda
