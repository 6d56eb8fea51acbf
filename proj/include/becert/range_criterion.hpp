#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "becert/complex_matrix.hpp"
#include "becert/linalg.hpp"
#include "becert/state_family.hpp"

namespace becert {

/// Parametric form of a range vector of the family states, with the fixed
/// basis ordering e1*e1, e1*e2, ..., e4*e4:
///   [A B C 0 -B D 0 E -C 0 F G 0 -E -G H]^t.
/// Free slots sit at positions 1, 2, 3, 6, 8, 11, 12, 16 (1-based); positions
/// 5, 9, 14, 15 carry the negated partners and 4, 7, 10, 13 are forced zeros.
struct RangePattern {
    Complex A, B, C, D, E, F, G, H;

    CVector to_vector() const;

    /// Fits a 16-vector to the pattern. Component tolerances are relative to
    /// the vector norm. Returns nullopt when a forced zero or a sign pair is
    /// violated.
    static std::optional<RangePattern> from_vector(const CVector& v, double tol);
};

/// True iff every orthonormal range basis vector of rho fits RangePattern.
bool range_pattern_check(const DensityMatrix& rho, double tol = 1e-10);

/// The eight product-vector families spanning the separable vectors of the
/// range. Axis families are e_k tensor e_k up to scale; pair families live on
/// a coordinate pair {p, q} of both factors, the only pairs compatible with
/// the pattern being {1,2}, {1,3}, {2,4}, {3,4}.
enum class ProductFamily { Axis1, Axis2, Axis3, Axis4, Pair12, Pair13, Pair24, Pair34 };

constexpr std::array<ProductFamily, 8> kAllFamilies = {
    ProductFamily::Axis1,  ProductFamily::Axis2,  ProductFamily::Axis3,  ProductFamily::Axis4,
    ProductFamily::Pair12, ProductFamily::Pair13, ProductFamily::Pair24, ProductFamily::Pair34};

const char* family_name(ProductFamily f);
bool is_pair_family(ProductFamily f);

/// A product vector left tensor right, optionally tagged with the family and
/// free scalars it was instantiated from.
struct ProductVector {
    std::array<Complex, 4> left{};
    std::array<Complex, 4> right{};
    std::optional<ProductFamily> family;
    Complex lead = 0.0;          // scalar in the leading pattern slot
    Complex aux = 0.0;           // second free scalar (pair families)
    bool mirrored = false;       // opposite square-root branch

    CVector joint() const; // kron(left, right), 16 components
};

/// Residuals of the five bilinear constraint groups a product vector must
/// satisfy to fit RangePattern:
///   max(|b1 c4|, |b2 c3|, |b3 c2|, |b4 c1|),
///   |b1 c2 + b2 c1|, |b1 c3 + b3 c1|, |b2 c4 + b4 c2|, |b3 c4 + b4 c3|.
std::array<double, 5> bilinear_residuals(const ProductVector& pv);

/// Instantiates a family. Axis families use `lead` alone. Pair families on
/// {p, q} produce [1, -s/lead, ...]^t tensor [lead, s, ...]^t with
/// s = sqrt(-lead * aux) (principal branch; `mirror` selects the other one,
/// which is span-redundant among the straight vectors). Throws
/// DegenerateScalarError when a pair family gets |lead| < 1e-12.
ProductVector family_vector(ProductFamily f, Complex lead, Complex aux = 0.0,
                            bool mirror = false);

/// Partial complex conjugation: left tensor conj(right).
CVector pcc(const ProductVector& pv);

/// Classifies a product vector as a family instantiation (up to global
/// scalar) from the supports of its factors and the sign-pair ratio.
std::optional<ProductFamily> match_family(const ProductVector& pv, double tol = 1e-6);

/// Deterministic scalar set used to seed span constructions.
const std::array<Complex, 4>& deterministic_scalars();

/// All family instantiations over the deterministic scalar set
/// (4 per axis family, 16 per pair family; mirrored branches on request).
std::vector<ProductVector> deterministic_instantiations(bool mirrored = false);

struct PccSamplingPolicy {
    std::uint64_t seed = 0;
    int batch_size = 16;
    int stable_batches = 10; // stop once the rank held through this many batches
    int max_batches = 400;
    double membership_tol = 1e-10;
};

/// Orthonormal span of the partially conjugated family instantiations for the
/// symmetric instance at the given eps. Instantiations are kept only if the
/// straight vector lies in range(rho) and the conjugated one in range of the
/// partial transpose (tolerance policy.membership_tol); the span then grows
/// with freshly sampled free scalars until its rank is stable. Throws
/// NoStabilizationError if the rank exceeds the ambient range rank or fails
/// to settle within policy.max_batches.
RangeBasis pcc_span(double eps, const PccSamplingPolicy& policy = {});

/// Same construction against an arbitrary family state.
RangeBasis pcc_span_for_state(const DensityMatrix& rho, const PccSamplingPolicy& policy = {});

/// Seeded alternating search for product vectors inside a subspace of
/// C^16 = C^4 tensor C^4: with one factor fixed, the optimal other factor is
/// the top eigenvector of a 4x4 Hermitian matrix. Returns deduplicated
/// candidates whose relative off-subspace residual is at most 1e-8.
std::vector<ProductVector> product_search(const RangeBasis& basis, int restarts,
                                          std::uint64_t seed);

/// The witness vector e1 tensor e2.
CVector witness_vector();

enum class Verdict { BoundEntangled, Npt, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of the full range-criterion pipeline.
struct Certificate {
    double eps = 0.0;
    int rank_rho = 0;
    int rank_pt = 0;
    int pcc_span_rank = 0;
    double witness_in_range_pt = 0.0; // relative residual
    double witness_in_pcc_span = 0.0; // relative residual
    Verdict verdict = Verdict::Inconclusive;
};

/// Residual thresholds of the certificate: BoundEntangled requires a PPT
/// partial transpose, witness_in_range_pt <= 1e-10 and
/// witness_in_pcc_span >= 1e-6.
inline constexpr double kWitnessRangeTol = 1e-10;
inline constexpr double kWitnessSpanTol = 1e-6;

Certificate certify(const FamilyParams& params, std::uint64_t seed = 0,
                    double tol = kDefaultRankTol);

} // namespace becert
