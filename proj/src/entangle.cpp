#include "fragmenta/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fragmenta {

ExactScalar DensityMatrix::trace() const {
    ExactScalar t;
    for (std::int64_t i = 0; i < dim; ++i) t += rho[i][i];
    return t;
}

std::vector<std::vector<std::complex<double>>> DensityMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> m(dim,
                                                     std::vector<std::complex<double>>(dim));
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j)
            m[i][j] = {rho[i][j].to_double_re(), rho[i][j].to_double_im()};
    return m;
}

DensityMatrix reduced_density(const ExactVector& v, const std::vector<int>& region,
                              const ChainGeometry& geom) {
    if (region.empty() || static_cast<int>(region.size()) >= geom.L)
        throw Error("region must be a proper nonempty subsystem");
    for (int s : region)
        if (s < 0 || s >= geom.L) throw Error("region site out of range");
    Rational norm = v.norm2();
    if (norm == 0) throw Error("cannot reduce the zero vector");

    const int r = static_cast<int>(region.size());
    std::int64_t rdim = 1;
    for (int i = 0; i < r; ++i) rdim *= geom.N;

    // group amplitudes by the configuration of the complement
    std::map<std::int64_t, std::vector<std::pair<std::int64_t, ExactScalar>>> groups;
    for (const auto& [s, amp] : v.entries) {
        std::int64_t rc = 0;
        for (int i = 0; i < r; ++i) rc = rc * geom.N + digit_at(s, region[i], geom.L, geom.N);
        std::int64_t rest = s;
        for (int i = 0; i < r; ++i) rest = with_digit(rest, region[i], 0, geom.L, geom.N);
        groups[rest].emplace_back(rc, amp);
    }

    DensityMatrix out;
    out.region = region;
    out.dim = rdim;
    out.rho.assign(rdim, std::vector<ExactScalar>(rdim));
    for (const auto& [rest, terms] : groups) {
        for (const auto& [ra, aa] : terms)
            for (const auto& [rb, ab] : terms) out.rho[ra][rb] += aa * ab.conj();
    }
    ExactScalar inv_norm(Rational(norm.get_den(), norm.get_num()));
    for (auto& row : out.rho)
        for (auto& x : row) x = x * inv_norm;
    return out;
}

SchmidtData schmidt(const ExactVector& v, int cut, const ChainGeometry& geom) {
    if (cut <= 0 || cut >= geom.L) throw Error("cut must be interior");
    std::int64_t ldim = 1, rdim = 1;
    for (int i = 0; i < cut; ++i) ldim *= geom.N;
    for (int i = cut; i < geom.L; ++i) rdim *= geom.N;

    // amplitude matrix rows (one per left configuration)
    std::map<std::int64_t, ExactVector> rows;
    for (const auto& [s, amp] : v.entries) {
        std::int64_t left = s / rdim, right = s % rdim;
        auto it = rows.find(left);
        if (it == rows.end()) it = rows.emplace(left, ExactVector(rdim)).first;
        it->second.set(right, amp);
    }
    std::vector<ExactVector> row_list;
    row_list.reserve(rows.size());
    for (const auto& [l, row] : rows) row_list.push_back(row);

    SchmidtData data;
    data.cut = cut;
    data.rank = exact_rank(row_list);

    // floating decomposition for the coefficients
    double nrm = std::sqrt(v.norm2().get_d());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(ldim, rdim);
    for (const auto& [s, amp] : v.entries) {
        std::int64_t left = s / rdim, right = s % rdim;
        m(left, right) = std::complex<double>(amp.to_double_re(), amp.to_double_im()) / nrm;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd sv = svd.singularValues();
    for (int i = 0; i < data.rank && i < sv.size(); ++i) data.mu.push_back(sv(i));
    data.float_residual = data.rank < sv.size() ? sv(data.rank) : 0.0;
    data.entropy = 0.0;
    for (double mu : data.mu) {
        double p = mu * mu;
        if (p > 0) data.entropy -= p * std::log(p);
    }
    return data;
}

bool verify_schmidt_squares(const ExactVector& v, int cut, const ChainGeometry& geom,
                            const std::vector<Rational>& claimed) {
    if (cut <= 0 || cut >= geom.L) throw Error("cut must be interior");
    std::int64_t ldim = 1, rdim = 1;
    for (int i = 0; i < cut; ++i) ldim *= geom.N;
    for (int i = cut; i < geom.L; ++i) rdim *= geom.N;
    Rational norm = v.norm2();
    if (norm == 0) return false;

    // Gram matrix G = M M^dag / <v|v>
    std::map<std::int64_t, ExactVector> rows;
    for (const auto& [s, amp] : v.entries) {
        std::int64_t left = s / rdim, right = s % rdim;
        auto it = rows.find(left);
        if (it == rows.end()) it = rows.emplace(left, ExactVector(rdim)).first;
        it->second.set(right, amp);
    }
    std::vector<std::int64_t> occupied;
    for (const auto& [l, row] : rows) occupied.push_back(l);
    const int n = static_cast<int>(occupied.size());
    ExactScalar inv_norm(Rational(norm.get_den(), norm.get_num()));
    std::vector<std::vector<ExactScalar>> G(n, std::vector<ExactScalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G[i][j] = rows[occupied[j]].inner(rows[occupied[i]]) * inv_norm;

    // multiset check: multiplicity of each claimed eigenvalue from the rank
    // drop of G - lambda I; the unclaimed remainder must be the zero space
    std::map<Rational, int> multiplicities;
    for (const auto& lam : claimed) multiplicities[lam] += 1;
    Rational total(0);
    int count = 0;
    for (const auto& [lam, mult] : multiplicities) {
        if (lam == 0) throw Error("claimed Schmidt weights must be nonzero");
        std::vector<ExactVector> shifted;
        for (int i = 0; i < n; ++i) {
            ExactVector row(n);
            for (int j = 0; j < n; ++j) {
                ExactScalar x = G[i][j];
                if (i == j) x -= ExactScalar(lam);
                if (!x.is_zero()) row.set(j, x);
            }
            shifted.push_back(std::move(row));
        }
        int drop = n - exact_rank(shifted);
        if (drop != mult) return false;
        total += lam * mult;
        count += mult;
    }
    if (total != 1) return false;
    // no unclaimed nonzero eigenvalues: rank(G) equals the claimed count
    std::vector<ExactVector> gr;
    for (int i = 0; i < n; ++i) {
        ExactVector row(n);
        for (int j = 0; j < n; ++j)
            if (!G[i][j].is_zero()) row.set(j, G[i][j]);
        gr.push_back(std::move(row));
    }
    return exact_rank(gr) == count;
}

BellnessReport bellness(const DensityMatrix& rho, double tol) {
    if (rho.dim != 4) throw DimensionMismatch("bellness needs a two-qubit density matrix");
    Eigen::Matrix4cd m;
    auto cm = rho.to_complex();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = cm[i][j];

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
    BellnessReport rep;
    for (int i = 3; i >= 0; --i) rep.eigenvalues.push_back(es.eigenvalues()(i));

    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Eigen::Vector4cd> bells(4);
    bells[0] << s, 0, 0, -s;   // (|00> - |11>)/sqrt2
    bells[1] << 0, s, s, 0;    // (|01> + |10>)/sqrt2
    bells[2] << s, 0, 0, s;    // (|00> + |11>)/sqrt2
    bells[3] << 0, s, -s, 0;   // (|01> - |10>)/sqrt2
    for (int k = 0; k < 2; ++k) {
        Eigen::Vector4cd vec = es.eigenvectors().col(3 - k);
        std::vector<double> overlaps;
        for (const auto& bell : bells) overlaps.push_back(std::norm(bell.dot(vec)));
        rep.bell_overlaps.push_back(overlaps);
    }

    Eigen::Matrix4cd target = 0.5 * (bells[0] * bells[0].adjoint() + bells[1] * bells[1].adjoint());
    rep.is_half_bell_mixture = (m - target).cwiseAbs().maxCoeff() < tol;
    return rep;
}

std::vector<WindowReport> window_tomography(const ExactVector& v, const LocalRule& rule,
                                            const PhasePolicy& policy, const ChainGeometry& geom) {
    ExactOperator H_qf = promote(rule, policy, geom);
    if (!H_qf.apply(v).is_zero()) throw Error("window tomography requires a frozen input state");

    LocalSectorDecomposition dec = decompose_local(rule);
    std::vector<ExactVector> psis = local_projector_states(dec, policy);

    const int k = rule.range;
    const int windows = geom.num_bonds(k);
    std::vector<WindowReport> reports;
    for (int x = 0; x < windows; ++x) {
        std::vector<int> sites(k + 1);
        for (int i = 0; i <= k; ++i) sites[i] = (x + i) % geom.L;
        DensityMatrix rho = reduced_density(v, sites, geom);

        WindowReport rep;
        rep.window = x;
        rep.c_entangled = 0;
        rep.c_product = 0;
        std::size_t psi_index = 0;
        for (const auto& comp : dec.components) {
            if (comp.size() <= 1) {
                rep.c_product += rho.rho[comp.configs[0]][comp.configs[0]].re;
                continue;
            }
            const ExactVector& psi = psis[psi_index++];
            // <psi|rho|psi> must vanish exactly for a frozen state
            ExactScalar psi_weight;
            for (const auto& [i, a] : psi.entries)
                for (const auto& [j, b] : psi.entries) psi_weight += a.conj() * rho.rho[i][j] * b;
            if (!psi_weight.is_zero())
                throw Error("frozen state carries weight on a local projector target");
            Rational comp_weight(0);
            for (std::int64_t c : comp.configs) comp_weight += rho.rho[c][c].re;
            rep.c_alpha.push_back(comp_weight);
            rep.c_entangled += comp_weight;
        }
        if (rep.c_entangled + rep.c_product != 1)
            throw Error("window weights do not close to unity");
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::string window_tomography_csv(const std::vector<WindowReport>& reports) {
    std::ostringstream os;
    os << "window,c_entangled,c_product,per_component\n";
    for (const auto& r : reports) {
        os << r.window << "," << r.c_entangled.get_str() << "," << r.c_product.get_str() << ",";
        for (std::size_t i = 0; i < r.c_alpha.size(); ++i)
            os << (i ? ";" : "") << r.c_alpha[i].get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace fragmenta
