#include "splitlie/rational.hpp"

#include "splitlie/errors.hpp"

namespace splitlie {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::JacobiFailure: return "JacobiFailure";
    case ErrorKind::ModuleAxiomFailure: return "ModuleAxiomFailure";
    case ErrorKind::NotSplitOverField: return "NotSplitOverField";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::CartanNotAbelian: return "CartanNotAbelian";
    case ErrorKind::NotSelfCentralizing: return "NotSelfCentralizing";
    case ErrorKind::NotWeightModule: return "NotWeightModule";
    case ErrorKind::SymmetryViolation: return "SymmetryViolation";
    case ErrorKind::MismatchedAlgebra: return "MismatchedAlgebra";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    }
    return "Error";
}

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (sgn(v_.get_den()) == 0)
        throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    mpq_class q;
    // mpq_set_str accepts "p" and "p/q"; reject empty and embedded whitespace up front.
    if (text.empty() || text.find_first_of(" \t\r\n") != std::string_view::npos)
        throw Error(ErrorKind::Parse, "invalid rational literal '" + std::string(text) + "'");
    if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        throw Error(ErrorKind::Parse, "invalid rational literal '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.sign() < 0)
        r.v_ = -r.v_;
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::InvalidInput, "division by zero");
    v_ /= o.v_;
    return *this;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

static void check_same_len(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
}

Vec vec_add(const Vec& a, const Vec& b) {
    check_same_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    check_same_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

Vec vec_neg(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

} // namespace splitlie
