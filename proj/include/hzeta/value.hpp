#pragma once

#include "hzeta/hpreal.hpp"

namespace hz {

struct ValueWithBound {
    HPReal value;
    HPReal abs_error;
    bool rigorous = false;

    static ValueWithBound exact(HPReal v) { return {std::move(v), HPReal(0), true}; }
};

inline ValueWithBound operator+(const ValueWithBound& a, const ValueWithBound& b) {
    return {a.value + b.value, a.abs_error + b.abs_error, a.rigorous && b.rigorous};
}

inline ValueWithBound operator-(const ValueWithBound& a, const ValueWithBound& b) {
    return {a.value - b.value, a.abs_error + b.abs_error, a.rigorous && b.rigorous};
}

inline ValueWithBound operator-(const ValueWithBound& a) { return {-a.value, a.abs_error, a.rigorous}; }

inline ValueWithBound operator*(const ValueWithBound& a, const ValueWithBound& b) {
    return {a.value * b.value,
            abs(a.value) * b.abs_error + abs(b.value) * a.abs_error + a.abs_error * b.abs_error,
            a.rigorous && b.rigorous};
}

inline ValueWithBound operator*(const HPReal& c, const ValueWithBound& a) {
    return {c * a.value, abs(c) * a.abs_error, a.rigorous};
}

inline ValueWithBound operator/(const ValueWithBound& a, const ValueWithBound& b) {
    const HPReal q = a.value / b.value;
    const HPReal denom = abs(b.value) - b.abs_error;
    const HPReal err = denom > 0 ? (a.abs_error + abs(q) * b.abs_error) / denom : HPReal(abs(q));
    return {q, err, a.rigorous && b.rigorous && denom > 0};
}

}  // namespace hz
