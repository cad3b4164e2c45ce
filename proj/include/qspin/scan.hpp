#pragma once

// Parameter sweeps, the critical inverse temperature and the phase boundary.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "qspin/entanglement.hpp"
#include "qspin/error.hpp"
#include "qspin/model.hpp"

namespace qspin {

/// C_T above this is entangled; below it is numerical dust.
inline constexpr double kOnsetThreshold = 1e-9;
inline constexpr double kBetaBracketLow = 1e-4;
inline constexpr double kBetaBracketHigh = 50.0;
inline constexpr int kBisectionCap = 80;
inline constexpr double kDefaultBetaTolerance = 1e-6;

enum class Spacing { linear, log };

struct Range {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;
    Spacing spacing = Spacing::linear;

    static Range single(double v) { return {v, v, 1, Spacing::linear}; }

    void validate(const char* name) const {
        const std::string n(name);
        if (!std::isfinite(min) || !std::isfinite(max))
            throw Error(ErrorKind::InvalidArgument, n + " range must be finite");
        if (count == 0) throw Error(ErrorKind::InvalidArgument, n + " count must be >= 1");
        if (count == 1 && min != max)
            throw Error(ErrorKind::InvalidArgument, n + " single-node range needs min == max");
        if (count >= 2 && !(min < max))
            throw Error(ErrorKind::InvalidArgument, n + " range needs min < max");
        if (spacing == Spacing::log && !(min > 0.0))
            throw Error(ErrorKind::InvalidArgument, n + " log range needs min > 0");
    }

    double at(std::size_t i) const {
        if (count == 1) return min;
        if (i + 1 == count) return max;
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        if (spacing == Spacing::log) return min * std::pow(max / min, t);
        return min + t * (max - min);
    }

    std::vector<double> values() const {
        std::vector<double> v(count);
        for (std::size_t i = 0; i < count; ++i) v[i] = at(i);
        return v;
    }
};

struct GridSpec {
    Range alpha = Range::single(1.0);
    Range beta = Range::single(1.0);
    Range eta = Range::single(0.14);
    Mode mode = Mode::paper;

    void validate() const {
        alpha.validate("alpha");
        beta.validate("beta");
        eta.validate("eta");
        if (alpha.min < 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be >= 0");
        if (beta.min < 0.0) throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
        if (eta.min < 0.0 || eta.max > 1.0)
            throw Error(ErrorKind::InvalidArgument, "eta must lie in [0, 1]");
    }
};

struct PureRow {
    double alpha, eta, c;
};

struct ThermalRow {
    double alpha, beta, eta, c_t;
};

struct PhaseBoundaryPoint {
    double alpha, beta_c, eta;
};

struct PhaseBoundary {
    std::vector<PhaseBoundaryPoint> points;
    std::vector<std::string> notes;  // one per omitted alpha
};

namespace detail {

inline std::size_t resolve_threads(std::size_t requested, std::size_t work) {
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(n, work));
}

/// Runs body(i) for i in [0, n) on up to `threads` workers. The first
/// exception thrown by any body is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
    const std::size_t workers = resolve_threads(threads, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

inline double concurrence_at(double alpha, double eta, double beta, Mode mode) {
    return thermal_concurrence(ModelParams{alpha, eta, beta, mode, std::nullopt});
}

}  // namespace detail

/// Smallest beta at which the thermal state becomes entangled, by bisection
/// on [1e-4, 50]. Assumes a single onset: the result is re-checked at 1.01 beta_c.
inline double critical_beta(double alpha, double eta, double tol = kDefaultBetaTolerance,
                            Mode mode = Mode::paper) {
    if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "critical_beta needs alpha > 0");
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
    ModelParams{alpha, eta, 0.0, mode, std::nullopt}.validate();

    auto entangled = [&](double beta) {
        return detail::concurrence_at(alpha, eta, beta, mode) > kOnsetThreshold;
    };
    double lo = kBetaBracketLow, hi = kBetaBracketHigh;
    if (entangled(lo))
        throw Error(ErrorKind::BracketFailure, "already entangled at the lower end of the bracket");
    if (!entangled(hi))
        throw Error(ErrorKind::NoTransition, "no entanglement anywhere in the beta bracket");

    for (int it = 0; it < kBisectionCap && hi - lo >= tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        (entangled(mid) ? hi : lo) = mid;
    }
    const double beta_c = 0.5 * (lo + hi);
    if (!entangled(std::min(1.01 * beta_c, kBetaBracketHigh)))
        throw Error(ErrorKind::BracketFailure, "entanglement onset is not monotone near beta_c");
    return beta_c;
}

/// Closed-form ground-state concurrence on the (alpha, eta) grid, alpha-major.
inline std::vector<PureRow> sweep_pure(const GridSpec& g) {
    g.validate();
    std::vector<PureRow> rows;
    rows.reserve(g.alpha.count * g.eta.count);
    for (double a : g.alpha.values())
        for (double e : g.eta.values())
            rows.push_back({a, e, closed_form_concurrence(ModelParams{a, e, 0.0, g.mode, {}})});
    return rows;
}

/// Thermal concurrence on the (alpha, beta, eta) grid. Rows are in
/// alpha-major, then beta, then eta order whatever the thread count.
inline std::vector<ThermalRow> sweep_thermal(const GridSpec& g, std::size_t threads = 0) {
    g.validate();
    const auto as = g.alpha.values(), bs = g.beta.values(), es = g.eta.values();
    const std::size_t n = as.size() * bs.size() * es.size();
    std::vector<ThermalRow> rows(n);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        const double a = as[i / (bs.size() * es.size())];
        const double b = bs[(i / es.size()) % bs.size()];
        const double e = es[i % es.size()];
        rows[i] = {a, b, e, detail::concurrence_at(a, e, b, g.mode)};
    });
    return rows;
}

/// critical_beta for each alpha; alphas without a transition are reported in notes.
inline PhaseBoundary phase_boundary(const std::vector<double>& alphas, double eta,
                                    double tol = kDefaultBetaTolerance, Mode mode = Mode::paper,
                                    std::size_t threads = 0) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0)) throw Error(ErrorKind::InvalidArgument, "alphas must be > 0");
        if (i && !(alphas[i] > alphas[i - 1]))
            throw Error(ErrorKind::InvalidArgument, "alphas must be ascending");
    }
    struct Slot {
        double beta_c = 0.0;
        std::string note;
    };
    std::vector<Slot> slots(alphas.size());
    detail::parallel_for(alphas.size(), threads, [&](std::size_t i) {
        try {
            slots[i].beta_c = critical_beta(alphas[i], eta, tol, mode);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoTransition && e.kind() != ErrorKind::BracketFailure) throw;
            slots[i].note = "alpha=" + std::to_string(alphas[i]) + " omitted: " + e.what();
        }
    });
    PhaseBoundary out;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (slots[i].note.empty())
            out.points.push_back({alphas[i], slots[i].beta_c, eta});
        else
            out.notes.push_back(slots[i].note);
    }
    return out;
}

enum class FrequencyConvention { cyclic, angular };

inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kPi = 3.14159265358979323846;

/// Spin temperature (kelvin) for a normalized inverse temperature beta, given
/// the quadrupole coupling e^2Qq in MHz. omega_Q = e^2Qq / 12 for spin 3/2.
/// `cyclic` reads the MHz figure as nu (E = h nu); `angular` as omega (E = hbar omega).
inline double cu63_temperature(double beta, double eqq_mhz,
                               FrequencyConvention convention = FrequencyConvention::cyclic) {
    if (!(beta > 0.0) || !(eqq_mhz > 0.0))
        throw Error(ErrorKind::InvalidArgument, "beta and eQq must be > 0");
    const double t = kPlanck * eqq_mhz * 1e6 / 12.0 / (kBoltzmann * beta);
    return convention == FrequencyConvention::cyclic ? t : t / (2.0 * kPi);
}

}  // namespace qspin
