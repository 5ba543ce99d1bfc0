#pragma once

#include <vector>

#include "riskpath/accumulate.hpp"
#include "riskpath/graph.hpp"
#include "riskpath/polynomial.hpp"

namespace riskpath {

/// Accumulation over one open alpha-interval on which every edge's neighbor
/// attempt order is constant. `accumulated = por(alpha, inner)` holds for
/// every edge; for the bat model `inner` is also the remainder A.
struct SymbolicPiece {
    double lo = 0.0;
    double hi = 1.0;
    std::vector<Polynomial> accumulated;
    std::vector<Polynomial> inner;
    std::vector<std::vector<EdgeIndex>> attempt_order;
};

struct PiecewiseAccumulation {
    Model model = Model::bat;
    std::vector<double> breakpoints;  // interior piece boundaries, sorted
    std::vector<SymbolicPiece> pieces;

    const SymbolicPiece& piece_at(double alpha) const;
};

/// Substitutes a uniform symbolic risk alpha for every edge risk and runs
/// the backward accumulation with exact integer-coefficient polynomials.
/// The interval (0,1) is split wherever a neighbor order swap occurs; the
/// eagle model's values are order-independent, so it always yields a single
/// piece. Numeric edge risks are ignored.
PiecewiseAccumulation accumulate_symbolic(const Dag& dag, Model model = Model::bat);

/// An alpha where the greedy first choice at the source changes.
struct Crossover {
    double alpha = 0.0;
    EdgeIndex below = -1;  // first choice for alpha just below
    EdgeIndex above = -1;  // first choice for alpha just above
};

/// All decision crossovers of the source's first choice in (0,1), in
/// increasing alpha order. Empty when one choice dominates throughout.
std::vector<Crossover> find_crossovers(const Dag& dag);

struct SweepRow {
    double alpha = 0.0;
    std::vector<double> failure;  // per source out-edge, same order as choice_edges
    EdgeIndex chosen = -1;
};

struct SweepTable {
    std::vector<EdgeIndex> choice_edges;  // out-edges of the source, id order
    std::vector<SweepRow> rows;
};

/// Evaluates each source out-edge polynomial at steps points covering [0,1]
/// and marks the greedy choice per row.
SweepTable sweep(const Dag& dag, int steps);

}  // namespace riskpath
