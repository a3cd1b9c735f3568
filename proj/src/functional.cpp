#include "splitlie/functional.hpp"

#include "splitlie/errors.hpp"

namespace splitlie {

Functional Functional::operator+(const Functional& o) const {
    return Functional(vec_add(c_, o.c_));
}

Functional Functional::operator-() const { return Functional(vec_neg(c_)); }

std::string Functional::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            s += ",";
        s += c_[i].str();
    }
    s += ")";
    return s;
}

bool operator<(const Functional& a, const Functional& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "functional arity mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.c_[i] < b.c_[i])
            return true;
        if (b.c_[i] < a.c_[i])
            return false;
    }
    return false;
}

} // namespace splitlie
