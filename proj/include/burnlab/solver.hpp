// Decision procedures: exact m-round burnability of square-order forests,
// covering burnability for arbitrary forests, burning number and
// well-burnability, all with extractable certificates.
#pragma once

#include <cstdint>
#include <optional>

#include "burnlab/forest.hpp"

namespace burnlab {

enum class BurnMode { Exact, Covering };

// Disjoint sets of odd source sizes, one block per path (canonical order).
// Exact: block i sums to l_i and the blocks use all of {1,3,...,2m-1}.
// Covering: block i sums to >= l_i; unused odd values are allowed.
struct BurnCertificate {
    int m = 0;
    BurnMode mode = BurnMode::Exact;
    std::vector<std::vector<Order>> blocks;  // values descending within a block
};

enum class CertFault {
    None,
    BlockCount,
    ValueOutOfRange,
    ValueEven,
    DuplicateValue,
    SumMismatch,    // exact: block sum != l_i; covering: block sum < l_i
    NotPartition,   // exact: some odd value in {1,...,2m-1} unused
};

bool verify_certificate(const PathForest& t, const BurnCertificate& c,
                        CertFault* fault = nullptr);

// Exact burnability of a square-order forest: can {1,3,...,2m-1} be split
// into blocks with sums (l_1,...,l_n)?  Empty result means deficient.
std::optional<BurnCertificate> decide_exact(const PathForest& t);

enum class Verdict { Burnable, NotBurnable, Unknown };

struct DecideOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<BurnCertificate> certificate;
};

// Same decision with a search-node budget; Unknown when the budget runs out.
DecideOutcome decide_exact_limited(const PathForest& t, std::uint64_t node_budget);

// Covering burnability: disjoint subsets of {1,3,...,2m-1} with block-sum
// at least l_i for every path.  Requires m >= n.
std::optional<BurnCertificate> decide_burnable(const PathForest& t, int m);

struct BurningNumber {
    int m = 0;
    BurnCertificate certificate;
};

// Least m with decide_burnable nonempty; search starts at max(n, ceil(sqrt N)).
BurningNumber burning_number(const PathForest& t);

struct WellResult {
    bool well = false;
    std::optional<BurnCertificate> certificate;
};

// bn(T) <= ceil(sqrt N)?  For square order this is exact burnability.
WellResult is_well_burnable(const PathForest& t);

}  // namespace burnlab
