#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace croac {

class Rng;

// Dense square matrix, row major. Just enough linear algebra for the
// benchmark transformations.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
    static Matrix identity(int n);

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_identity() const;

    // out = M x / out = M^T x. out must not alias x.
    void apply(const double* x, double* out) const;
    void apply_transposed(const double* x, double* out) const;
    std::vector<double> apply(const std::vector<double>& x) const;
    std::vector<double> apply_transposed(const std::vector<double>& x) const;

    // max |M^T M - I| over all entries.
    double orthogonality_residual() const;

  private:
    int n_ = 0;
    std::vector<double> a_;
};

// Haar-like random orthogonal matrix (Gaussian fill + modified Gram-Schmidt
// with reorthogonalization pass).
Matrix random_orthogonal(int n, Rng& rng);

// One benchmark instance: f(id) evaluated on z = M (x - shift) * scale.
struct BenchmarkSpec {
    int id = 1;  // 1..16
    int dim = 30;
    double lower = -100.0;
    double upper = 100.0;
    double scale = 1.0;
    std::vector<double> shift;  // all zeros when the function is unshifted
    Matrix rotation;            // identity when unrotated
    bool griewank_sqrt_divisor = false;  // f11/f12: use cos(z_i/sqrt(i)) instead of cos(z_i/i)
};

int parse_function_id(const std::string& name);   // "f7" -> 7
std::string function_name(int id);                // 7 -> "f7"
const char* function_long_name(int id);           // 7 -> "Schwefel's Problem 2.26"
bool function_has_shift(int id);
bool function_has_rotation(int id);
double function_scale(int id);

// Piecewise boundary penalty used by f15/f16.
double penalty_u(double x, double a, double k, double m);

// z = M (x - shift) * scale.
std::vector<double> transform(const std::vector<double>& x, const BenchmarkSpec& spec);

// Objective value at x. Pure; identical inputs give bit-identical outputs.
double evaluate(const std::vector<double>& x, const BenchmarkSpec& spec);

// A point attaining the global minimum of the spec (value 0 up to rounding).
std::vector<double> optimum_point(const BenchmarkSpec& spec);

// Deterministic in (id, dim, seed). Shift vectors are sampled in the inner
// 80% of the range, constrained so the optimum stays strictly inside the
// bounds; rotations are random orthogonal (f8 additionally keeps the rotated
// optimum feasible).
BenchmarkSpec generate_spec(int id, int dim, std::uint64_t seed);

// Plain-text spec files; save/load round-trips bit exactly.
void save_spec(const BenchmarkSpec& spec, const std::string& path);
BenchmarkSpec load_spec(const std::string& path);

// Objective handle consumed by the reactor. Carries the search box and a
// thread-safe evaluation closure.
struct Problem {
    int dim = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::function<double(const std::vector<double>&)> objective;
};

Problem make_problem(const BenchmarkSpec& spec);

}  // namespace croac
