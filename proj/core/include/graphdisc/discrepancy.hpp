#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graphdisc/family.hpp"
#include "graphdisc/graph.hpp"
#include "graphdisc/labeling.hpp"
#include "graphdisc/oracles.hpp"

namespace graphdisc {

/// max |f(A)| over the family, together with a member attaining it.
/// Throws empty_family_error when the family has no member in g.
std::pair<int, Witness> labeling_discrepancy(const Graph& g, const Labeling& f, FamilyKind kind,
                                             const OracleCaps& caps = {});

/// Value-only variant used inside the labeling sweep.
int labeling_discrepancy_value(const Graph& g, const Labeling& f, FamilyKind kind,
                               const OracleCaps& caps = {});

/// Family-emptiness-independent lower bound on the graph discrepancy:
/// parity of the member size for the spanning families, majority-star and
/// single-edge bounds for trees and paths.
int trivial_lower_bound(const Graph& g, FamilyKind kind);

struct DiscrepancyReport {
    FamilyKind kind{};
    bool exact = true;
    int value = 0;       // exact value, or the best upper bound found
    int lower_bound = 0; // proven lower bound; equals value when exact
    Labeling argmin;
    Witness witness; // attains the inner max at argmin
    std::uint64_t labelings_examined = 0;
    std::uint64_t labelings_total = 0; // 2^(m-1) after sign fixing
    int threads = 1;
    double wall_ms = 0.0;
};

/// Exact graph discrepancy by enumerating labelings. Sign symmetry
/// D(f) = D(-f) fixes edge 0 to +1, so 2^(m-1) labelings are swept; ties
/// among argmin labelings break to the smallest labeling index, so the
/// report is identical for any worker count. When 2^(m-1) exceeds the
/// budget only the first `budget` labelings are examined and the report is
/// flagged inexact with a proven lower bound attached.
DiscrepancyReport exact_discrepancy(const Graph& g, FamilyKind kind,
                                    std::uint64_t budget = std::uint64_t{1} << 26,
                                    int threads = 1, const OracleCaps& caps = {});

enum class BoundDirection { upper, lower };

struct BoundCheckReport {
    bool pass = false;
    BoundDirection direction{};
    int claimed = 0;
    int observed = 0;   // inner max of the certificate labeling, or exact value
    bool exact = false; // observed came from a full sweep
    std::string method; // "labeling-certificate" or "exact-sweep"
    std::optional<Labeling> certificate;
    std::optional<Witness> witness;
};

/// Checks a claimed bound on D(g, kind). Upper bounds accept a certificate
/// labeling (PASS iff its inner max is <= the claim); without one, and for
/// lower bounds, the exact sweep decides.
BoundCheckReport bound_check(const Graph& g, FamilyKind kind, int claimed, BoundDirection dir,
                             const std::optional<Labeling>& certificate = std::nullopt,
                             std::uint64_t budget = std::uint64_t{1} << 26, int threads = 1,
                             const OracleCaps& caps = {});

} // namespace graphdisc
