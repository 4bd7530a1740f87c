#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// vectorized variants chosen at runtime. Every variant must reproduce the
// scalar reference; the Kummer series kernel performs the same operations in
// the same order per lane and therefore agrees bit for bit.

#include <span>
#include <string_view>

namespace darboux_dirac::kernels {

enum class Backend { scalar, avx2 };

/// Series stopping parameters shared by every Kummer kernel.
struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 1000;
};

bool backend_available(Backend b) noexcept;
/// Backend used by the dispatched entry points. Defaults to the widest one
/// the CPU supports.
Backend active_backend() noexcept;
/// Forces a backend; throws DomainError if the CPU cannot run it.
void set_backend(Backend b);
std::string_view backend_name(Backend b) noexcept;

/// out[i] = M(a, b, x[i]) by direct summation of the Kummer series.
///
/// A lane stops once its newest term is exactly zero, or once
/// |term| <= rel_tol * |partial sum| after the terms have started to shrink
/// monotonically (past k > -a with next ratio below one). Throws
/// ConvergenceError if any lane is still running after max_terms terms.
void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl = {});
/// Sum of a[i] * b[i].
double dot(std::span<const double> a, std::span<const double> b);
/// Largest |a[i]|, 0 for an empty span. NaN entries propagate.
double max_abs(std::span<const double> a);

namespace scalar {
void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl);
double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> a);
}  // namespace scalar

namespace avx2 {
void kummer_series(double a, double b, std::span<const double> x, std::span<double> out,
                   SeriesControl ctl);
double dot(std::span<const double> a, std::span<const double> b);
double max_abs(std::span<const double> a);
}  // namespace avx2

}  // namespace darboux_dirac::kernels
