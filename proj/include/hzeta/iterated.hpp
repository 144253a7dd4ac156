#pragma once

#include "hzeta/compositions.hpp"
#include "hzeta/hpreal.hpp"
#include "hzeta/value.hpp"

#include <string>

namespace hz {

// letter 0 is dt/t; letter 1 is dt/(1-t) (mpl) or 2dt/(1-t^2) (kta)
enum class PathKernel { mpl, kta };

// 0^{k_1-1} 1 0^{k_2-1} 1 ..., outermost letter first
std::string word_of(const Composition& k);
// inverse of word_of; the word must end in 1
Composition composition_of(const std::string& word);

// Shuffle-regularised value of the iterated integral from 0 to 1 (I(1) = 0).
ValueWithBound regularized_constant(PathKernel kernel, const std::string& word, const HPReal& tol);

// Regularised iterated integral from 0 to s (s small), log s kept symbolic in the expansion.
HPReal regularized_near_zero(PathKernel kernel, const std::string& word, const HPReal& s);

// Li_k(1-s) (mpl) or A(k; (1-s)/(1+s)) (kta) by splitting the path at 1.
ValueWithBound path_near_one(PathKernel kernel, const Composition& k, const HPReal& s, const HPReal& tol);

}  // namespace hz
