#pragma once

#include "splitlie/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace splitlie {

/// Element of H* as the coordinate vector (alpha(h_1), ..., alpha(h_k)) on the
/// Cartan basis. Compares lexicographically; that order is the global
/// tie-breaking rule for every reported list.
class Functional {
public:
    Functional() = default;
    explicit Functional(Vec coords) : c_(std::move(coords)) {}

    std::size_t size() const { return c_.size(); }
    const Rational& coord(std::size_t i) const { return c_[i]; }
    const Vec& coords() const { return c_; }

    bool is_zero() const { return vec_is_zero(c_); }

    Functional operator+(const Functional& o) const;
    Functional operator-() const;

    std::string str() const; // "(2)" or "(2,0)"

    friend bool operator==(const Functional& a, const Functional& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Functional& a, const Functional& b) { return !(a == b); }
    friend bool operator<(const Functional& a, const Functional& b);

private:
    Vec c_;
};

} // namespace splitlie
