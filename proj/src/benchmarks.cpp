#include "croac/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "croac/rng.hpp"

namespace croac {

namespace {

constexpr double kPi = std::numbers::pi;

// Per-dimension argmax and maximum of z * sin(sqrt(|z|)). Realized in full
// double precision so the benchmark minimum is exactly zero; the usual
// 4-decimal rounding of the bias would put a 1.3e-5-per-dimension floor under
// every result.
constexpr double kSchwefelArgmax = 420.96874635998205;
constexpr double kSchwefelBias = 418.9828872724337;

enum class Family {
    Sphere,
    WeightedSphere,  // f2: the double sum collapses to sum_i i * z_i^2
    Schwefel222,
    Ackley,
    Schwefel226,
    Rastrigin,
    Griewank,
    Levy,
    Penalized1,
    Penalized2,
};

struct FunctionInfo {
    Family family;
    double scale;
    bool shifted;
    bool rotated;
    const char* long_name;
};

constexpr std::array<FunctionInfo, 16> kFunctions{{
    {Family::Sphere, 1.0, true, false, "Shifted Sphere Function"},
    {Family::WeightedSphere, 1.0, true, false, "Shifted Schwefel's Problem 1.2"},
    {Family::Schwefel222, 0.1, true, false, "Shifted Schwefel's Problem 2.22"},
    {Family::Schwefel222, 0.1, true, true, "Shifted Rotated Schwefel's Problem 2.22"},
    {Family::Ackley, 0.32, true, false, "Shifted Ackley's Function"},
    {Family::Ackley, 0.32, true, true, "Shifted Rotated Ackley's Function"},
    {Family::Schwefel226, 5.0, false, false, "Schwefel's Problem 2.26"},
    {Family::Schwefel226, 5.0, false, true, "Rotated Schwefel's Problem 2.26"},
    {Family::Rastrigin, 0.0512, true, false, "Shifted Rastrigin's Function"},
    {Family::Rastrigin, 0.0512, true, true, "Shifted Rotated Rastrigin's Function"},
    {Family::Griewank, 6.0, true, false, "Shifted Griewank's Function"},
    {Family::Griewank, 6.0, true, true, "Shifted Rotated Griewank's Function"},
    {Family::Levy, 0.1, true, false, "Shifted Levy's Function"},
    {Family::Levy, 0.1, true, true, "Shifted Rotated Levy's Function"},
    {Family::Penalized1, 0.5, true, false, "Shifted Penalized Function 1"},
    {Family::Penalized2, 0.5, true, false, "Shifted Penalized Function 2"},
}};

const FunctionInfo& info_for(int id) {
    if (id < 1 || id > 16) {
        throw std::invalid_argument("benchmark id out of range: " + std::to_string(id));
    }
    return kFunctions[static_cast<std::size_t>(id - 1)];
}

// Per-dimension position of the global optimum in z-space.
double z_optimum(int id) {
    switch (info_for(id).family) {
        case Family::Schwefel226: return kSchwefelArgmax;
        case Family::Levy: return -1.0;        // y = 1
        case Family::Penalized1: return 1.0;
        case Family::Penalized2: return -1.0;  // y = 1
        default: return 0.0;
    }
}

double eval_family(Family family, const double* z, int n, bool griewank_sqrt) {
    switch (family) {
        case Family::Sphere: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += z[i] * z[i];
            return s;
        }
        case Family::WeightedSphere: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += (i + 1) * z[i] * z[i];
            return s;
        }
        case Family::Schwefel222: {
            double sum = 0.0, prod = 1.0;
            for (int i = 0; i < n; ++i) {
                const double a = std::fabs(z[i]);
                sum += a;
                prod *= a;
            }
            return sum + prod;
        }
        case Family::Ackley: {
            double sq = 0.0, cs = 0.0;
            for (int i = 0; i < n; ++i) {
                sq += z[i] * z[i];
                cs += std::cos(2.0 * kPi * z[i]);
            }
            return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) +
                   20.0 + std::numbers::e;
        }
        case Family::Schwefel226: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += z[i] * std::sin(std::sqrt(std::fabs(z[i])));
            return kSchwefelBias * n - s;
        }
        case Family::Rastrigin: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
                s += z[i] * z[i] - 10.0 * std::cos(2.0 * kPi * z[i]) + 10.0;
            }
            return s;
        }
        case Family::Griewank: {
            double sum = 0.0, prod = 1.0;
            for (int i = 0; i < n; ++i) {
                sum += z[i] * z[i] / 4000.0;
                const double div = griewank_sqrt ? std::sqrt(double(i + 1)) : double(i + 1);
                prod *= std::cos(z[i] / div);
            }
            return sum - prod + 1.0;
        }
        case Family::Levy: {
            // y_i = 1 + (z_i + 1)/4
            const auto y = [&](int i) { return 1.0 + 0.25 * (z[i] + 1.0); };
            double s = std::sin(kPi * y(0));
            s *= s;
            for (int i = 0; i + 1 < n; ++i) {
                const double yi = y(i), sy = std::sin(y(i + 1));
                s += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * sy * sy);
            }
            const double yn = y(n - 1), sn = std::sin(2.0 * kPi * yn);
            return s + (yn - 1.0) * (yn - 1.0) * (1.0 + sn * sn);
        }
        case Family::Penalized1: {
            const double s0 = std::sin(3.0 * kPi * z[0]);
            double s = s0 * s0;
            for (int i = 0; i + 1 < n; ++i) {
                const double si = std::sin(3.0 * kPi * z[i + 1]);
                s += (z[i] - 1.0) * (z[i] - 1.0) * (1.0 + si * si);
            }
            const double sn = std::sin(2.0 * kPi * z[n - 1]);
            s += (z[n - 1] - 1.0) * (z[n - 1] - 1.0) * (1.0 + sn * sn);
            double pen = 0.0;
            for (int i = 0; i < n; ++i) pen += penalty_u(z[i], 5.0, 100.0, 4.0);
            return 0.1 * s + pen;
        }
        case Family::Penalized2: {
            const auto y = [&](int i) { return 1.0 + 0.25 * (z[i] + 1.0); };
            const double s0 = std::sin(kPi * y(0));
            double s = 10.0 * s0 * s0;
            for (int i = 0; i + 1 < n; ++i) {
                const double yi = y(i), sy = std::sin(kPi * y(i + 1));
                s += (yi - 1.0) * (yi - 1.0) * (1.0 + 10.0 * sy * sy);
            }
            const double yn = y(n - 1);
            s += (yn - 1.0) * (yn - 1.0);
            double pen = 0.0;
            for (int i = 0; i < n; ++i) pen += penalty_u(z[i], 10.0, 100.0, 4.0);
            return (kPi / n) * s + pen;
        }
    }
    throw std::logic_error("unhandled benchmark family");
}

// Shared by evaluate() and the Problem closure so both produce bit-identical
// values. Scratch buffers are thread local; runs may evaluate concurrently.
double evaluate_impl(const std::vector<double>& x, const BenchmarkSpec& spec,
                     bool rotated) {
    const int n = spec.dim;
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    thread_local std::vector<double> shifted, z;
    shifted.resize(n);
    z.resize(n);
    for (int i = 0; i < n; ++i) shifted[i] = x[i] - spec.shift[i];
    const double* zp;
    if (rotated) {
        spec.rotation.apply(shifted.data(), z.data());
        for (int i = 0; i < n; ++i) z[i] *= spec.scale;
        zp = z.data();
    } else {
        for (int i = 0; i < n; ++i) shifted[i] *= spec.scale;
        zp = shifted.data();
    }
    return eval_family(info_for(spec.id).family, zp, n, spec.griewank_sqrt_divisor);
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error(msg);
}

std::string fmt_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

double parse_double_token(const std::string& tok, const std::string& context) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::runtime_error("spec file: expected a number for " + context +
                                 ", got '" + tok + "'");
    }
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::is_identity() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if ((*this)(i, j) != (i == j ? 1.0 : 0.0)) return false;
        }
    }
    return true;
}

void Matrix::apply(const double* x, double* out) const {
    for (int i = 0; i < n_; ++i) {
        const double* row = &a_[i * n_];
        double acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
}

void Matrix::apply_transposed(const double* x, double* out) const {
    for (int j = 0; j < n_; ++j) out[j] = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double* row = &a_[i * n_];
        for (int j = 0; j < n_; ++j) out[j] += row[j] * x[i];
    }
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    apply(x.data(), out.data());
    return out;
}

std::vector<double> Matrix::apply_transposed(const std::vector<double>& x) const {
    std::vector<double> out(static_cast<std::size_t>(n_));
    apply_transposed(x.data(), out.data());
    return out;
}

double Matrix::orthogonality_residual() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n_; ++k) acc += (*this)(k, i) * (*this)(k, j);
            worst = std::max(worst, std::fabs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Matrix random_orthogonal(int n, Rng& rng) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = rng.normal(1.0);
    }
    // Modified Gram-Schmidt on columns, projecting twice per column.
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < j; ++k) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += m(i, k) * m(i, j);
                for (int i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += m(i, j) * m(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw std::runtime_error("degenerate random matrix");
        for (int i = 0; i < n; ++i) m(i, j) /= norm;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Function table helpers
// ---------------------------------------------------------------------------

int parse_function_id(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
        int id = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), id);
        if (ec == std::errc() && ptr == name.data() + name.size() && id >= 1 && id <= 16) {
            return id;
        }
    }
    throw std::invalid_argument("unknown benchmark function '" + name +
                                "' (expected f1..f16)");
}

std::string function_name(int id) {
    info_for(id);
    return "f" + std::to_string(id);
}

const char* function_long_name(int id) { return info_for(id).long_name; }
bool function_has_shift(int id) { return info_for(id).shifted; }
bool function_has_rotation(int id) { return info_for(id).rotated; }
double function_scale(int id) { return info_for(id).scale; }

double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

std::vector<double> transform(const std::vector<double>& x, const BenchmarkSpec& spec) {
    const int n = spec.dim;
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("transform: point dimension mismatch");
    }
    std::vector<double> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = x[i] - spec.shift[i];
    std::vector<double> z = spec.rotation.is_identity() ? std::move(shifted)
                                                        : spec.rotation.apply(shifted);
    for (double& v : z) v *= spec.scale;
    return z;
}

double evaluate(const std::vector<double>& x, const BenchmarkSpec& spec) {
    return evaluate_impl(x, spec, !spec.rotation.is_identity());
}

std::vector<double> optimum_point(const BenchmarkSpec& spec) {
    const double zo = z_optimum(spec.id);
    std::vector<double> z(spec.dim, zo / spec.scale);
    std::vector<double> x = spec.rotation.is_identity() ? z : spec.rotation.apply_transposed(z);
    for (int i = 0; i < spec.dim; ++i) x[i] += spec.shift[i];
    return x;
}

Problem make_problem(const BenchmarkSpec& spec) {
    auto shared = std::make_shared<const BenchmarkSpec>(spec);
    const bool rotated = !shared->rotation.is_identity();
    Problem p;
    p.dim = shared->dim;
    p.lower = shared->lower;
    p.upper = shared->upper;
    p.objective = [shared, rotated](const std::vector<double>& x) {
        return evaluate_impl(x, *shared, rotated);
    };
    return p;
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

namespace {

// Orthogonal matrix for f8 that keeps the rotated optimum inside the box.
// The optimum preimage must satisfy M x* = (z*/s) * ones and has a fixed
// euclidean norm, so a generic rotation would push it far outside the
// bounds. We pick x* on the sign diagonal (|x*_i| = z*/s ~ 84.2, feasible),
// then compose a random rotation with the reflection aligning x* with ones.
Matrix constrained_orthogonal_schwefel(int n, Rng& rng) {
    std::vector<double> sign(n);
    for (double& s : sign) s = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    Matrix q = random_orthogonal(n, rng);

    const double inv = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> xhat(n);
    for (int i = 0; i < n; ++i) xhat[i] = sign[i] * inv;
    std::vector<double> v = q.apply(xhat);

    // Householder u = v - what with what = ones/sqrt(n); H v = what.
    std::vector<double> u(n);
    double unorm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        u[i] = v[i] - inv;
        unorm2 += u[i] * u[i];
    }
    if (unorm2 < 1e-24) return q;  // already aligned

    // M = (I - 2 u u^T / u^T u) Q, computed as Q - (2/u^T u) u (u^T Q).
    Matrix m = q;
    std::vector<double> utq(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) utq[j] += u[i] * q(i, j);
    }
    const double c = 2.0 / unorm2;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) -= c * u[i] * utq[j];
    }
    return m;
}

}  // namespace

BenchmarkSpec generate_spec(int id, int dim, std::uint64_t seed) {
    const FunctionInfo& info = info_for(id);
    if (dim < 2) throw std::invalid_argument("generate_spec: dim must be >= 2");

    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(id)));
    BenchmarkSpec spec;
    spec.id = id;
    spec.dim = dim;
    spec.scale = info.scale;
    spec.shift.assign(dim, 0.0);

    if (info.rotated) {
        spec.rotation = (info.family == Family::Schwefel226)
                            ? constrained_orthogonal_schwefel(dim, rng)
                            : random_orthogonal(dim, rng);
    } else {
        spec.rotation = Matrix::identity(dim);
    }

    if (info.shifted) {
        // offset from the shift to the optimum: v = M^T (z_opt * ones) / s
        const double zo = z_optimum(id);
        std::vector<double> v(dim, 0.0);
        if (zo != 0.0) {
            std::vector<double> zv(dim, zo / spec.scale);
            v = spec.rotation.is_identity() ? zv : spec.rotation.apply_transposed(zv);
        }
        // Sample inside the central 80% of the box, intersected with the
        // interval keeping the optimum x* = shift + v strictly feasible.
        constexpr double kMargin = 0.5;
        for (int i = 0; i < dim; ++i) {
            const double lo = std::max(0.8 * spec.lower, spec.lower + kMargin - v[i]);
            const double hi = std::min(0.8 * spec.upper, spec.upper - kMargin - v[i]);
            require(lo < hi, "generate_spec: infeasible shift interval");
            spec.shift[i] = rng.uniform(lo, hi);
        }
    }

    require(spec.rotation.orthogonality_residual() <= 1e-10,
            "generate_spec: rotation failed orthogonality check");
    return spec;
}

// ---------------------------------------------------------------------------
// Spec files
// ---------------------------------------------------------------------------

void save_spec(const BenchmarkSpec& spec, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), "cannot open spec file for writing: " + path);
    out << "croac-spec v1\n";
    out << "id " << function_name(spec.id) << "\n";
    out << "dim " << spec.dim << "\n";
    out << "lower " << fmt_double(spec.lower) << "\n";
    out << "upper " << fmt_double(spec.upper) << "\n";
    out << "scale " << fmt_double(spec.scale) << "\n";
    out << "griewank_sqrt " << (spec.griewank_sqrt_divisor ? 1 : 0) << "\n";
    out << "shift\n";
    for (int i = 0; i < spec.dim; ++i) out << fmt_double(spec.shift[i]) << "\n";
    out << "rotation\n";
    for (int i = 0; i < spec.dim; ++i) {
        for (int j = 0; j < spec.dim; ++j) {
            if (j) out << ' ';
            out << fmt_double(spec.rotation(i, j));
        }
        out << "\n";
    }
    require(out.good(), "write failed for spec file: " + path);
}

BenchmarkSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open spec file: " + path);

    std::string line;
    require(static_cast<bool>(std::getline(in, line)) && line == "croac-spec v1",
            "spec file " + path + ": missing 'croac-spec v1' header");

    BenchmarkSpec spec;
    auto next_kv = [&](const std::string& key) {
        std::string k, v;
        require(static_cast<bool>(in >> k >> v), "spec file " + path + ": truncated header");
        require(k == key, "spec file " + path + ": expected '" + key + "', got '" + k + "'");
        return v;
    };
    spec.id = parse_function_id(next_kv("id"));
    spec.dim = static_cast<int>(parse_double_token(next_kv("dim"), "dim"));
    require(spec.dim >= 1, "spec file " + path + ": dim must be positive");
    spec.lower = parse_double_token(next_kv("lower"), "lower");
    spec.upper = parse_double_token(next_kv("upper"), "upper");
    require(spec.lower < spec.upper, "spec file " + path + ": empty bounds");
    spec.scale = parse_double_token(next_kv("scale"), "scale");
    require(spec.scale > 0.0, "spec file " + path + ": scale must be positive");
    spec.griewank_sqrt_divisor = parse_double_token(next_kv("griewank_sqrt"), "griewank_sqrt") != 0.0;

    std::string tok;
    require(static_cast<bool>(in >> tok) && tok == "shift",
            "spec file " + path + ": missing shift section");
    spec.shift.resize(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
        require(static_cast<bool>(in >> tok),
                "spec file " + path + ": truncated shift section");
        if (tok == "rotation") {
            throw std::runtime_error("spec file " + path + ": dimension mismatch, expected " +
                                     std::to_string(spec.dim) + " shift values, got " +
                                     std::to_string(i));
        }
        spec.shift[i] = parse_double_token(tok, "shift[" + std::to_string(i) + "]");
    }
    require(static_cast<bool>(in >> tok) && tok == "rotation",
            "spec file " + path + ": missing rotation section");
    spec.rotation = Matrix(spec.dim);
    for (int i = 0; i < spec.dim; ++i) {
        for (int j = 0; j < spec.dim; ++j) {
            require(static_cast<bool>(in >> tok),
                    "spec file " + path + ": dimension mismatch in rotation matrix");
            spec.rotation(i, j) = parse_double_token(tok, "rotation entry");
        }
    }

    const double residual = spec.rotation.orthogonality_residual();
    if (residual > 1e-8) {
        std::ostringstream msg;
        msg << "spec file " << path << ": rotation matrix is not orthogonal (residual "
            << residual << ")";
        throw std::runtime_error(msg.str());
    }
    return spec;
}

}  // namespace croac
