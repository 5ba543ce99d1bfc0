#include "riskpath/symbolic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace riskpath {

namespace {

// Sign of (a - b) on the open interval, assuming the difference has no
// sign-change root strictly inside it. Samples the midpoint first and walks
// a small dyadic grid if the midpoint happens to be an exact root.
int compare_on_interval(const Polynomial& a, const Polynomial& b, double lo, double hi) {
    Polynomial d = a - b;
    if (d.is_zero()) return 0;
    int s = d.sign_at(lo + (hi - lo) / 2);
    if (s != 0) return s;
    for (int k = 1; k < 16; ++k) {
        if (k == 8) continue;
        s = d.sign_at(lo + (hi - lo) * (static_cast<double>(k) / 16));
        if (s != 0) return s;
    }
    return 0;
}

std::vector<EdgeIndex> order_neighbors(const std::vector<EdgeIndex>& neighbors,
                                       const std::vector<Polynomial>& value, double lo,
                                       double hi) {
    std::vector<EdgeIndex> order = neighbors;  // id order; stable sort keeps ties that way
    std::stable_sort(order.begin(), order.end(), [&](EdgeIndex x, EdgeIndex y) {
        return compare_on_interval(value[static_cast<size_t>(x)],
                                   value[static_cast<size_t>(y)], lo, hi) < 0;
    });
    return order;
}

// Bat bracket with B_j = alpha for every neighbor:
//   alpha^n + sum_j (1 - alpha) * alpha^(attempts before j) * A(j)
Polynomial bat_inner_poly(const std::vector<EdgeIndex>& order,
                          const std::vector<Polynomial>& remainder) {
    const Polynomial alpha = Polynomial::variable();
    const Polynomial one_minus = Polynomial::constant(1) - alpha;
    Polynomial prefix = Polynomial::constant(1);
    Polynomial sum;
    for (EdgeIndex j : order) {
        sum = sum + one_minus * prefix * remainder[static_cast<size_t>(j)];
        prefix = prefix * alpha;
    }
    return prefix + sum;
}

void uniquify_sorted(std::vector<double>& xs, double tol) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end(),
                         [tol](double a, double b) { return std::abs(a - b) <= tol; }),
             xs.end());
}

}  // namespace

const SymbolicPiece& PiecewiseAccumulation::piece_at(double alpha) const {
    for (const auto& p : pieces)
        if (alpha <= p.hi) return p;
    return pieces.back();
}

PiecewiseAccumulation accumulate_symbolic(const Dag& dag, Model model) {
    const size_t n = static_cast<size_t>(dag.edge_count());
    const Polynomial alpha = Polynomial::variable();

    PiecewiseAccumulation out;
    out.model = model;

    SymbolicPiece initial;
    initial.lo = 0.0;
    initial.hi = 1.0;
    initial.accumulated.assign(n, Polynomial());
    initial.inner.assign(n, Polynomial());
    initial.attempt_order.assign(n, {});
    std::vector<SymbolicPiece> pieces{initial};

    for (EdgeIndex i : dag.reverse_topological_edge_order()) {
        const size_t si = static_cast<size_t>(i);
        const auto& neighbors = dag.neighbors(i);

        if (dag.terminal(i)) {
            for (auto& p : pieces) {
                p.accumulated[si] = alpha;
                p.inner[si] = Polynomial();
                p.attempt_order[si] = order_neighbors(neighbors, p.accumulated, p.lo, p.hi);
            }
            continue;
        }

        if (model == Model::eagle) {
            // Order-independent: no splitting can ever be needed.
            for (auto& p : pieces) {
                Polynomial prod = Polynomial::constant(1);
                for (EdgeIndex j : neighbors) prod = prod * p.accumulated[static_cast<size_t>(j)];
                p.inner[si] = prod;
                p.accumulated[si] = por(alpha, prod);
                p.attempt_order[si] = order_neighbors(neighbors, p.accumulated, p.lo, p.hi);
            }
            continue;
        }

        std::vector<SymbolicPiece> next;
        for (auto& p : pieces) {
            // Split wherever two neighbors' accumulated polynomials cross
            // inside this piece: the attempt order swaps there, which
            // changes the C(i;j) weights and everything upstream.
            std::vector<double> cuts;
            for (size_t a = 0; a < neighbors.size(); ++a) {
                for (size_t b = a + 1; b < neighbors.size(); ++b) {
                    Polynomial d = p.accumulated[static_cast<size_t>(neighbors[a])] -
                                   p.accumulated[static_cast<size_t>(neighbors[b])];
                    if (d.is_zero()) continue;
                    for (double r : sign_change_roots(d, p.lo, p.hi)) cuts.push_back(r);
                }
            }
            uniquify_sorted(cuts, 1e-12);

            std::vector<double> bounds{p.lo};
            bounds.insert(bounds.end(), cuts.begin(), cuts.end());
            bounds.push_back(p.hi);
            for (size_t k = 0; k + 1 < bounds.size(); ++k) {
                SymbolicPiece sub = p;
                sub.lo = bounds[k];
                sub.hi = bounds[k + 1];
                sub.attempt_order[si] =
                    order_neighbors(neighbors, sub.accumulated, sub.lo, sub.hi);
                sub.inner[si] = bat_inner_poly(sub.attempt_order[si], sub.inner);
                sub.accumulated[si] = por(alpha, sub.inner[si]);
                next.push_back(std::move(sub));
            }
        }
        pieces = std::move(next);
    }

    // Merge neighboring pieces whose attempt orders all agree (splits at
    // grid-exact tangencies produce them).
    for (auto& p : pieces) {
        if (out.pieces.empty() || out.pieces.back().attempt_order != p.attempt_order) {
            out.pieces.push_back(std::move(p));
        } else {
            out.pieces.back().hi = p.hi;
        }
    }
    for (size_t k = 0; k + 1 < out.pieces.size(); ++k) out.breakpoints.push_back(out.pieces[k].hi);
    return out;
}

std::vector<Crossover> find_crossovers(const Dag& dag) {
    std::vector<Crossover> out;
    const auto& outs = dag.out_edges(dag.source());
    if (outs.size() <= 1) return out;

    PiecewiseAccumulation pw = accumulate_symbolic(dag, Model::bat);

    // Candidate alphas: piece boundaries plus every root of a pairwise
    // difference of the source out-edge polynomials.
    std::vector<double> candidates = pw.breakpoints;
    for (const auto& p : pw.pieces) {
        for (size_t a = 0; a < outs.size(); ++a) {
            for (size_t b = a + 1; b < outs.size(); ++b) {
                Polynomial d = p.accumulated[static_cast<size_t>(outs[a])] -
                               p.accumulated[static_cast<size_t>(outs[b])];
                if (d.is_zero()) continue;
                for (double r : sign_change_roots(d, p.lo, p.hi, 1e-12)) candidates.push_back(r);
            }
        }
    }
    uniquify_sorted(candidates, 1e-9);

    auto first_choice_at = [&](double alpha) {
        const SymbolicPiece& p = pw.piece_at(alpha);
        EdgeIndex best = outs.front();
        for (size_t k = 1; k < outs.size(); ++k) {
            EdgeIndex e = outs[k];
            Polynomial d = p.accumulated[static_cast<size_t>(e)] -
                           p.accumulated[static_cast<size_t>(best)];
            if (!d.is_zero() && d.sign_at(alpha) < 0) best = e;
        }
        return best;
    };

    std::vector<double> bounds{0.0};
    bounds.insert(bounds.end(), candidates.begin(), candidates.end());
    bounds.push_back(1.0);

    EdgeIndex prev = -1;
    for (size_t k = 0; k + 1 < bounds.size(); ++k) {
        EdgeIndex choice = first_choice_at(bounds[k] + (bounds[k + 1] - bounds[k]) / 2);
        if (prev != -1 && choice != prev) out.push_back({bounds[k], prev, choice});
        prev = choice;
    }
    return out;
}

SweepTable sweep(const Dag& dag, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    SweepTable table;
    table.choice_edges = dag.out_edges(dag.source());
    PiecewiseAccumulation pw = accumulate_symbolic(dag, Model::bat);

    for (int k = 0; k < steps; ++k) {
        SweepRow row;
        row.alpha = static_cast<double>(k) / (steps - 1);
        const SymbolicPiece& p = pw.piece_at(row.alpha);
        for (EdgeIndex e : table.choice_edges)
            row.failure.push_back(p.accumulated[static_cast<size_t>(e)].eval(row.alpha));
        if (!row.failure.empty()) {
            size_t best = 0;
            for (size_t c = 1; c < row.failure.size(); ++c)
                if (row.failure[c] < row.failure[best]) best = c;
            row.chosen = table.choice_edges[best];
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace riskpath
