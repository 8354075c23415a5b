#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mapforge/constellation.hpp"

namespace mapforge {

/// The computable shadow of Galois invariance: everything here is constant
/// on conjugacy classes, and constellations in one Galois orbit must agree
/// on all of it. Agreement does NOT imply a shared orbit: this is a sound
/// necessary condition only, and the orbit itself is not computable from
/// the permutation data.
struct InvariantSignature {
    int degree = 0;
    std::vector<int> sigma_type;
    std::vector<int> alpha_type;
    std::vector<int> phi_type;
    int genus = 0;
    int center_rank = 0;                  // number of σ-cycles
    std::vector<int> normalization_type;  // = sigma_type
    std::optional<std::uint64_t> monodromy_order;

    friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;

    /// Deterministic bucketing key. An unset monodromy_order does not
    /// participate.
    std::string key() const;
};

/// Signature without the (cost-gated) monodromy order.
InvariantSignature signature(const Constellation& c);

/// Signature including the monodromy order; left unset when the closure
/// exceeds `limit`.
InvariantSignature signature_with_monodromy(const Constellation& c, std::uint64_t limit);

enum class OrbitVerdict { different_orbits, invariant_equivalent };

struct CompareResult {
    OrbitVerdict verdict = OrbitVerdict::different_orbits;
    bool isomorphic = false;  // meaningful for invariant_equivalent only
};

/// DifferentOrbits iff the signatures differ (they then cannot share a
/// Galois orbit); otherwise InvariantEquivalent with the canonical-form
/// isomorphism bit.
CompareResult compare(const Constellation& a, const Constellation& b);

/// Stable hex digest of the canonical form (FNV-1a over the canonical
/// image sequences). Equal digests of equal-degree maps mean isomorphic for
/// all practical purposes; classification compares full canonical forms.
std::string canonical_hash(const Constellation& c);

struct IsoClass {
    std::string canonical_hash;
    std::vector<int> members;  // indices into the classified batch
};

struct SignatureBucket {
    InvariantSignature signature;
    std::vector<IsoClass> classes;
};

struct ClassificationReport {
    std::vector<SignatureBucket> buckets;
};

/// Buckets by signature, refines each bucket into isomorphism classes by
/// canonical form. Buckets are sorted by signature key, classes by their
/// canonical form, members by input index, so reports are deterministic.
ClassificationReport classify_batch(const std::vector<Constellation>& cs);

nlohmann::json signature_to_json(const InvariantSignature& s);
nlohmann::json compare_to_json(const CompareResult& r);
nlohmann::json classification_to_json(const ClassificationReport& r);
std::string classification_to_text(const ClassificationReport& r);

}  // namespace mapforge
