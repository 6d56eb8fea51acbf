#include "becert/range_criterion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "becert/errors.hpp"
#include "becert/ppt.hpp"

namespace becert {

namespace {

// 0-based positions of the pattern slots in the 16-vector.
constexpr int kSlotA = 0, kSlotB = 1, kSlotC = 2, kSlotD = 5, kSlotE = 7, kSlotF = 10,
              kSlotG = 11, kSlotH = 15;
constexpr std::array<int, 4> kForcedZeros = {3, 6, 9, 12};
// (negated position, source slot) pairs: v[4]=-B, v[8]=-C, v[13]=-E, v[14]=-G.
constexpr std::array<std::pair<int, int>, 4> kMirrors = {
    {{4, kSlotB}, {8, kSlotC}, {13, kSlotE}, {14, kSlotG}}};

struct PairLayout {
    int p, q;
};

PairLayout pair_layout(ProductFamily f) {
    switch (f) {
        case ProductFamily::Pair12: return {0, 1};
        case ProductFamily::Pair13: return {0, 2};
        case ProductFamily::Pair24: return {1, 3};
        case ProductFamily::Pair34: return {2, 3};
        default: throw DegenerateScalarError("pair_layout: not a pair family");
    }
}

int axis_index(ProductFamily f) {
    switch (f) {
        case ProductFamily::Axis1: return 0;
        case ProductFamily::Axis2: return 1;
        case ProductFamily::Axis3: return 2;
        case ProductFamily::Axis4: return 3;
        default: throw DegenerateScalarError("axis_index: not an axis family");
    }
}

// Uniform double in [-1, 1] straight from the generator bits, so sampling is
// reproducible independent of the standard library's distribution internals.
double uniform_pm1(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

Complex random_scalar(std::mt19937_64& rng) { return {uniform_pm1(rng), uniform_pm1(rng)}; }

Complex random_lead(std::mt19937_64& rng) {
    Complex z = random_scalar(rng);
    while (std::abs(z) < 0.1) z = random_scalar(rng);
    return z;
}

struct SpanAccumulator {
    std::vector<CVector> vectors;
    double tol;

    int rank() const { return span_of(vectors, tol).rank(); }
};

// Keeps an instantiation only if the straight product vector lies in
// range(rho) and the conjugated one in range(rho^T2); only such vectors can
// appear in a separable decomposition.
void accumulate_pcc(const ProductVector& pv, const RangeBasis& range_rho,
                    const RangeBasis& range_pt, double membership_tol,
                    std::vector<CVector>& out) {
    const CVector straight = pv.joint();
    if (norm(straight) == 0.0) return;
    if (!subspace_contains(range_rho, straight, membership_tol).member) return;
    const CVector conjugated = pcc(pv);
    if (!subspace_contains(range_pt, conjugated, membership_tol).member) return;
    out.push_back(normalized(conjugated));
}

ProductVector random_instantiation(std::mt19937_64& rng) {
    const ProductFamily f = kAllFamilies[rng() % kAllFamilies.size()];
    if (is_pair_family(f))
        return family_vector(f, random_lead(rng), random_scalar(rng));
    return family_vector(f, random_lead(rng));
}

} // namespace

CVector RangePattern::to_vector() const {
    CVector v(16, Complex(0.0, 0.0));
    v[kSlotA] = A;
    v[kSlotB] = B;
    v[kSlotC] = C;
    v[kSlotD] = D;
    v[kSlotE] = E;
    v[kSlotF] = F;
    v[kSlotG] = G;
    v[kSlotH] = H;
    v[4] = -B;
    v[8] = -C;
    v[13] = -E;
    v[14] = -G;
    return v;
}

std::optional<RangePattern> RangePattern::from_vector(const CVector& v, double tol) {
    if (v.size() != 16) return std::nullopt;
    const double scale = std::max(norm(v), 1e-300);
    for (int z : kForcedZeros)
        if (std::abs(v[z]) > tol * scale) return std::nullopt;
    for (const auto& [pos, slot] : kMirrors)
        if (std::abs(v[pos] + v[slot]) > tol * scale) return std::nullopt;
    return RangePattern{v[kSlotA], v[kSlotB], v[kSlotC], v[kSlotD],
                        v[kSlotE], v[kSlotF], v[kSlotG], v[kSlotH]};
}

bool range_pattern_check(const DensityMatrix& rho, double tol) {
    const RangeBasis basis = orthonormal_range(rho.matrix());
    for (const CVector& v : basis.vectors)
        if (!RangePattern::from_vector(v, tol)) return false;
    return true;
}

const char* family_name(ProductFamily f) {
    switch (f) {
        case ProductFamily::Axis1: return "axis1";
        case ProductFamily::Axis2: return "axis2";
        case ProductFamily::Axis3: return "axis3";
        case ProductFamily::Axis4: return "axis4";
        case ProductFamily::Pair12: return "pair12";
        case ProductFamily::Pair13: return "pair13";
        case ProductFamily::Pair24: return "pair24";
        case ProductFamily::Pair34: return "pair34";
    }
    return "?";
}

bool is_pair_family(ProductFamily f) {
    return f == ProductFamily::Pair12 || f == ProductFamily::Pair13 ||
           f == ProductFamily::Pair24 || f == ProductFamily::Pair34;
}

CVector ProductVector::joint() const {
    return kron(CVector(left.begin(), left.end()), CVector(right.begin(), right.end()));
}

std::array<double, 5> bilinear_residuals(const ProductVector& pv) {
    const auto& b = pv.left;
    const auto& c = pv.right;
    const double zeros = std::max({std::abs(b[0] * c[3]), std::abs(b[1] * c[2]),
                                   std::abs(b[2] * c[1]), std::abs(b[3] * c[0])});
    return {zeros, std::abs(b[0] * c[1] + b[1] * c[0]), std::abs(b[0] * c[2] + b[2] * c[0]),
            std::abs(b[1] * c[3] + b[3] * c[1]), std::abs(b[2] * c[3] + b[3] * c[2])};
}

ProductVector family_vector(ProductFamily f, Complex lead, Complex aux, bool mirror) {
    ProductVector pv;
    pv.family = f;
    pv.lead = lead;
    pv.aux = aux;
    pv.mirrored = mirror;
    if (!is_pair_family(f)) {
        const int k = axis_index(f);
        pv.left[k] = 1.0;
        pv.right[k] = lead;
        return pv;
    }
    if (std::abs(lead) < 1e-12)
        throw DegenerateScalarError(std::string("family_vector: leading scalar of ") +
                                    family_name(f) + " is zero");
    const auto [p, q] = pair_layout(f);
    Complex root = std::sqrt(-lead * aux);
    // principal branch: Re >= 0, and Im >= 0 on the imaginary axis, immune to
    // the signed zero the negation above may produce
    if (root.real() < 0.0 || (root.real() == 0.0 && root.imag() < 0.0)) root = -root;
    if (mirror) root = -root;
    pv.left[p] = 1.0;
    pv.left[q] = -root / lead;
    pv.right[p] = lead;
    pv.right[q] = root;
    return pv;
}

CVector pcc(const ProductVector& pv) {
    std::array<Complex, 4> conj_right;
    for (int i = 0; i < 4; ++i) conj_right[i] = std::conj(pv.right[i]);
    return kron(CVector(pv.left.begin(), pv.left.end()),
                CVector(conj_right.begin(), conj_right.end()));
}

std::optional<ProductFamily> match_family(const ProductVector& pv, double tol) {
    const auto support = [tol](const std::array<Complex, 4>& v) {
        double max_abs = 0.0;
        for (const Complex& z : v) max_abs = std::max(max_abs, std::abs(z));
        std::vector<int> s;
        if (max_abs == 0.0) return s;
        for (int i = 0; i < 4; ++i)
            if (std::abs(v[i]) > tol * max_abs) s.push_back(i);
        return s;
    };
    const std::vector<int> sl = support(pv.left);
    const std::vector<int> sr = support(pv.right);
    if (sl.empty() || sl != sr) return std::nullopt;

    if (sl.size() == 1) {
        switch (sl[0]) {
            case 0: return ProductFamily::Axis1;
            case 1: return ProductFamily::Axis2;
            case 2: return ProductFamily::Axis3;
            default: return ProductFamily::Axis4;
        }
    }
    if (sl.size() != 2) return std::nullopt;

    ProductFamily candidate;
    if (sl[0] == 0 && sl[1] == 1) candidate = ProductFamily::Pair12;
    else if (sl[0] == 0 && sl[1] == 2) candidate = ProductFamily::Pair13;
    else if (sl[0] == 1 && sl[1] == 3) candidate = ProductFamily::Pair24;
    else if (sl[0] == 2 && sl[1] == 3) candidate = ProductFamily::Pair34;
    else return std::nullopt;

    // Sign-pair constraint: c_q / c_p must equal -(b_q / b_p).
    const Complex left_ratio = pv.left[sl[1]] / pv.left[sl[0]];
    const Complex right_ratio = pv.right[sl[1]] / pv.right[sl[0]];
    const double scale = std::max(1.0, std::abs(left_ratio));
    if (std::abs(left_ratio + right_ratio) > tol * scale) return std::nullopt;
    return candidate;
}

const std::array<Complex, 4>& deterministic_scalars() {
    static const std::array<Complex, 4> scalars = {Complex(1.0, 0.0), Complex(-1.0, 0.0),
                                                   Complex(0.0, 1.0), Complex(1.0, 1.0)};
    return scalars;
}

std::vector<ProductVector> deterministic_instantiations(bool mirrored) {
    std::vector<ProductVector> out;
    for (ProductFamily f : kAllFamilies) {
        if (is_pair_family(f)) {
            for (Complex lead : deterministic_scalars())
                for (Complex aux : deterministic_scalars())
                    out.push_back(family_vector(f, lead, aux, mirrored));
        } else if (!mirrored) {
            for (Complex lead : deterministic_scalars()) out.push_back(family_vector(f, lead));
        }
    }
    return out;
}

RangeBasis pcc_span_for_state(const DensityMatrix& rho, const PccSamplingPolicy& policy) {
    const RangeBasis range_rho = orthonormal_range(rho.matrix());
    const RangeBasis range_pt = orthonormal_range(partial_transpose(rho));
    const int ambient_rank = range_pt.rank();

    std::vector<CVector> collected;
    for (const ProductVector& pv : deterministic_instantiations())
        accumulate_pcc(pv, range_rho, range_pt, policy.membership_tol, collected);

    SpanAccumulator acc{std::move(collected), kDefaultRankTol};
    int rank = acc.rank();
    if (rank > ambient_rank)
        throw NoStabilizationError("pcc_span: rank exceeds the ambient range rank");

    std::mt19937_64 rng(policy.seed);
    int stable = 0;
    for (int batch = 0; batch < policy.max_batches && stable < policy.stable_batches; ++batch) {
        for (int i = 0; i < policy.batch_size; ++i)
            accumulate_pcc(random_instantiation(rng), range_rho, range_pt,
                           policy.membership_tol, acc.vectors);
        const int new_rank = acc.rank();
        if (new_rank > ambient_rank)
            throw NoStabilizationError("pcc_span: rank exceeds the ambient range rank");
        stable = (new_rank == rank) ? stable + 1 : 0;
        rank = new_rank;
    }
    if (stable < policy.stable_batches)
        throw NoStabilizationError("pcc_span: rank did not stabilize within the batch budget");
    return span_of(acc.vectors, kDefaultRankTol);
}

RangeBasis pcc_span(double eps, const PccSamplingPolicy& policy) {
    if (!(eps > 0.0 && eps <= 0.5))
        throw EpsRangeError("pcc_span: eps must lie in (0, 1/2]");
    return pcc_span_for_state(symmetric_instance(eps), policy);
}

std::vector<ProductVector> product_search(const RangeBasis& basis, int restarts,
                                          std::uint64_t seed) {
    if (basis.dim != 16) throw BadDimsError("product_search: basis must live in C^16");

    // Basis vectors reshaped to 4x4 coefficient matrices.
    std::vector<ComplexMatrix> mats;
    mats.reserve(basis.vectors.size());
    for (const CVector& u : basis.vectors) {
        ComplexMatrix m(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = u[4 * i + j];
        mats.push_back(std::move(m));
    }

    const auto top_eigvec = [](const ComplexMatrix& m) {
        const EigResult eig = hermitian_eig(m);
        return eig.eigenvectors.column(m.rows() - 1);
    };

    std::mt19937_64 rng(seed);
    std::vector<ProductVector> hits;
    for (int restart = 0; restart < restarts; ++restart) {
        CVector b(4), c(4);
        for (int i = 0; i < 4; ++i) {
            b[i] = random_scalar(rng);
            c[i] = random_scalar(rng);
        }
        b = normalized(b);
        c = normalized(c);

        double objective = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            // Optimal right factor for fixed b: top eigenvector of
            // sum_m conj(w_m) w_m^t with w_m = U_m^dagger b.
            ComplexMatrix mc(4, 4);
            for (const ComplexMatrix& u : mats) {
                CVector w(4);
                for (int j = 0; j < 4; ++j) {
                    Complex s = 0.0;
                    for (int i = 0; i < 4; ++i) s += std::conj(u(i, j)) * b[i];
                    w[j] = s;
                }
                for (int r = 0; r < 4; ++r)
                    for (int cc = 0; cc < 4; ++cc) mc(r, cc) += std::conj(w[r]) * w[cc];
            }
            c = top_eigvec(mc);

            ComplexMatrix mb(4, 4);
            for (const ComplexMatrix& u : mats) {
                CVector w(4);
                for (int i = 0; i < 4; ++i) {
                    Complex s = 0.0;
                    for (int j = 0; j < 4; ++j) s += std::conj(u(i, j)) * c[j];
                    w[i] = s;
                }
                for (int r = 0; r < 4; ++r)
                    for (int cc = 0; cc < 4; ++cc) mb(r, cc) += std::conj(w[r]) * w[cc];
            }
            b = top_eigvec(mb);

            double new_objective = 0.0;
            const CVector joint = kron(b, c);
            for (const CVector& u : basis.vectors) new_objective += std::norm(inner(u, joint));
            if (std::abs(new_objective - objective) < 1e-15) {
                objective = new_objective;
                break;
            }
            objective = new_objective;
        }

        ProductVector pv;
        std::copy(b.begin(), b.end(), pv.left.begin());
        std::copy(c.begin(), c.end(), pv.right.begin());
        const CVector joint = pv.joint();
        if (subspace_contains(basis, joint, 1e-8).residual > 1e-8) continue;

        // Canonical phases: largest component of each factor real positive.
        const auto canonicalize = [](std::array<Complex, 4>& v) {
            int arg_max = 0;
            for (int i = 1; i < 4; ++i)
                if (std::abs(v[i]) > std::abs(v[arg_max])) arg_max = i;
            const Complex phase = v[arg_max] / std::abs(v[arg_max]);
            for (Complex& z : v) z /= phase;
        };
        canonicalize(pv.left);
        canonicalize(pv.right);

        bool duplicate = false;
        for (const ProductVector& other : hits) {
            double dev = 0.0;
            for (int i = 0; i < 4; ++i)
                dev = std::max({dev, std::abs(pv.left[i] - other.left[i]),
                                std::abs(pv.right[i] - other.right[i])});
            if (dev < 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        pv.family = match_family(pv);
        hits.push_back(pv);
    }
    return hits;
}

CVector witness_vector() { return kron(basis_vector(4, 0), basis_vector(4, 1)); }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::BoundEntangled: return "bound_entangled";
        case Verdict::Npt: return "npt";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Certificate certify(const FamilyParams& params, std::uint64_t seed, double tol) {
    params.validate();
    const DensityMatrix rho = family_state(params);
    const ComplexMatrix pt = partial_transpose(rho);

    Certificate cert;
    cert.eps = params.eps;

    const RangeBasis range_rho = orthonormal_range(rho.matrix(), tol);
    const RangeBasis range_pt = orthonormal_range(pt, tol);
    cert.rank_rho = range_rho.rank();
    cert.rank_pt = range_pt.rank();

    const CVector witness = witness_vector();
    cert.witness_in_range_pt = subspace_contains(range_pt, witness, kWitnessRangeTol).residual;

    PccSamplingPolicy policy;
    policy.seed = seed;
    policy.membership_tol = kWitnessRangeTol;
    const RangeBasis span = pcc_span_for_state(rho, policy);
    cert.pcc_span_rank = span.rank();
    cert.witness_in_pcc_span = subspace_contains(span, witness, kWitnessSpanTol).residual;

    const double min_pt_eig = hermitian_eig(pt).eigenvalues.front();
    if (min_pt_eig < -kPptTol) {
        cert.verdict = Verdict::Npt;
    } else if (range_pattern_check(rho) && cert.witness_in_range_pt <= kWitnessRangeTol &&
               cert.witness_in_pcc_span >= kWitnessSpanTol) {
        cert.verdict = Verdict::BoundEntangled;
    } else {
        cert.verdict = Verdict::Inconclusive;
    }
    return cert;
}

} // namespace becert
