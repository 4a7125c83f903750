#pragma once

// Raw evaluators working at an explicit working precision (not installed).

#include "series.hpp"

namespace gwp1::analytic::detail {

SeriesValue G_raw(const Complex& z, const Complex& s, long target, prec_t w0, long max_terms);
SeriesValue Gt_raw(const Complex& z, const Complex& s, long target, prec_t w0, long max_terms);
SeriesValue j_raw(const Complex& a, const Complex& X, long target, prec_t w0, long max_terms);
Complex J_raw(const Complex& nu, const Complex& y, long target, prec_t w, long max_terms);
void require_j_regular(const Complex& a, const EvalOptions& opt);

// B(z;s) at working precision w (entries good to about target bits).
CMat B_raw(const Complex& z, const Complex& s, long target, prec_t w, long max_terms);

}  // namespace gwp1::analytic::detail
