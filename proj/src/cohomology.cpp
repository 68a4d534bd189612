#include "slr/cohomology.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "slr/invariants.hpp"

namespace slr {

namespace {

// relator letters as (generator index, exponent): a1 b1 a1^-1 b1^-1 ... c1..cn
std::vector<std::pair<int, int>> relator_letters(int g, int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g; ++i) {
        out.push_back({2 * i, 1});
        out.push_back({2 * i + 1, 1});
        out.push_back({2 * i, -1});
        out.push_back({2 * i + 1, -1});
    }
    for (int j = 0; j < n; ++j) out.push_back({2 * g + j, 1});
    return out;
}

std::vector<Mat2> generator_images(const SurfaceRep& rep) {
    std::vector<Mat2> out;
    for (int i = 0; i < rep.g; ++i) {
        out.push_back(rep.A[i]);
        out.push_back(rep.B[i]);
    }
    for (int j = 0; j < rep.n; ++j) out.push_back(rep.C[j]);
    return out;
}

Eigen::Matrix2d to_eigen(const Mat2& m) {
    Eigen::Matrix2d e;
    e << m.a, m.b, m.c, m.d;
    return e;
}

// cocycle value on one letter: u(x) or u(x^-1) = -phi(x)^-1 u(x)
Eigen::Vector2d letter_value(const std::vector<Eigen::Matrix2d>& phi,
                             const Eigen::VectorXd& u, std::pair<int, int> l) {
    Eigen::Vector2d v = u.segment<2>(2 * l.first);
    if (l.second == 1) return v;
    return -phi[l.first].inverse() * v;
}

double omega(const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
    return p.x() * q.y() - p.y() * q.x();
}

// min-norm least-squares solution of (C - I) p = rhs
Eigen::Vector2d boundary_primitive(const Eigen::Matrix2d& c, const Eigen::Vector2d& rhs) {
    Eigen::Matrix2d d = c - Eigen::Matrix2d::Identity();
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-10);
    return svd.solve(rhs);
}

// bar-resolution evaluation of u-cup-v on the relator plus the boundary
// primitive correction; antisymmetric junk removed by the caller
double cup_raw(const std::vector<Eigen::Matrix2d>& phi,
               const std::vector<std::pair<int, int>>& letters, int g, int n,
               const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    double total = 0;
    Eigen::Vector2d uw = Eigen::Vector2d::Zero();
    Eigen::Matrix2d w = Eigen::Matrix2d::Identity();
    for (auto& l : letters) {
        total += omega(uw, w * letter_value(phi, v, l));
        uw += w * letter_value(phi, u, l);
        w = l.second == 1 ? Eigen::Matrix2d(w * phi[l.first])
                          : Eigen::Matrix2d(w * phi[l.first].inverse());
    }
    for (int j = 0; j < n; ++j) {
        const Eigen::Matrix2d& c = phi[2 * g + j];
        Eigen::Vector2d pu = boundary_primitive(c, u.segment<2>(2 * (2 * g + j)));
        Eigen::Vector2d pv = boundary_primitive(c, v.segment<2>(2 * (2 * g + j)));
        total += 0.5 * (omega(c * pu, pv) + omega(c * pv, pu));
    }
    return total;
}

struct BasisData {
    std::vector<Eigen::Matrix2d> phi;
    std::vector<std::pair<int, int>> letters;
    Eigen::MatrixXd basis; // ambient x dim
    int dim_cocycles = 0, dim_coboundaries = 0;
    double min_sv = 0;
};

void check_band(const Eigen::VectorXd& sv, double tol, const char* what) {
    double top = sv.size() ? sv(0) : 0;
    for (int i = 0; i < sv.size(); ++i) {
        double s = sv(i);
        if (s > 0.1 * tol * top && s < 10 * tol * top && top > 0)
            fail(errc::rank_ambiguous, std::string(what) + ": singular value " +
                                           std::to_string(s) + " inside the tolerance band");
    }
}

BasisData build_basis(const SurfaceRep& rep, double tol) {
    if (int(rep.A.size()) != rep.g || int(rep.B.size()) != rep.g || int(rep.C.size()) != rep.n)
        fail(errc::not_a_representation, "generator count mismatch");
    if (rep.relation_residual() > 1e-6)
        fail(errc::not_a_representation, "relation residual too large");
    BasisData out;
    int gens = 2 * rep.g + rep.n;
    int ambient = 2 * gens;
    for (const Mat2& m : generator_images(rep)) out.phi.push_back(to_eigen(m));
    out.letters = relator_letters(rep.g, rep.n);

    // constraint rows: u(relator) = 0, then u(c_j) in Im(phi(c_j) - I)
    std::vector<Eigen::RowVectorXd> rows;
    for (int rw = 0; rw < 2; ++rw) rows.push_back(Eigen::RowVectorXd::Zero(ambient));
    {
        Eigen::MatrixXd rel = Eigen::MatrixXd::Zero(2, ambient);
        for (int k = 0; k < ambient; ++k) {
            Eigen::VectorXd u = Eigen::VectorXd::Zero(ambient);
            u(k) = 1;
            Eigen::Vector2d uw = Eigen::Vector2d::Zero();
            Eigen::Matrix2d w = Eigen::Matrix2d::Identity();
            for (auto& l : out.letters) {
                uw += w * letter_value(out.phi, u, l);
                w = l.second == 1 ? Eigen::Matrix2d(w * out.phi[l.first])
                                  : Eigen::Matrix2d(w * out.phi[l.first].inverse());
            }
            rel.col(k) = uw;
        }
        rows[0] = rel.row(0);
        rows[1] = rel.row(1);
    }
    for (int j = 0; j < rep.n; ++j) {
        const Mat2& cm = rep.C[j];
        if (cm.dist(Mat2::identity()) < 1e-9)
            fail(errc::not_a_representation,
                 "boundary image = I: restricted cohomology not defined here");
        Eigen::Matrix2d d = out.phi[2 * rep.g + j] - Eigen::Matrix2d::Identity();
        Eigen::JacobiSVD<Eigen::Matrix2d> svd(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::Vector2d sv = svd.singularValues();
        check_band(sv, tol, "boundary image rank");
        int rank = (sv(0) > tol) + (sv(1) > tol * std::max(1.0, sv(0)));
        if (rank == 2) continue; // no condition: Im = R^2
        Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(ambient);
        Eigen::Vector2d normal = svd.matrixU().col(1); // orthogonal to Im(d)
        row(2 * (2 * rep.g + j)) = normal(0);
        row(2 * (2 * rep.g + j) + 1) = normal(1);
        rows.push_back(row);
    }
    Eigen::MatrixXd k_mat(rows.size(), ambient);
    for (size_t i = 0; i < rows.size(); ++i) k_mat.row(long(i)) = rows[i];

    Eigen::JacobiSVD<Eigen::MatrixXd> ksvd(k_mat, Eigen::ComputeFullV);
    Eigen::VectorXd ksv = ksvd.singularValues();
    double ktop = ksv.size() ? ksv(0) : 0;
    int krank = 0;
    for (int i = 0; i < ksv.size(); ++i)
        if (ksv(i) > tol * std::max(1.0, ktop)) ++krank;
    Eigen::MatrixXd z = ksvd.matrixV().rightCols(ambient - krank);
    out.dim_cocycles = ambient - krank;

    // coboundaries v -> (phi(x_i)-I)v inside the cocycle space
    Eigen::MatrixXd cob(ambient, 2);
    for (int t = 0; t < 2; ++t) {
        Eigen::Vector2d v = Eigen::Vector2d::Zero();
        v(t) = 1;
        for (int i = 0; i < gens; ++i)
            cob.block<2, 1>(2 * i, t) = (out.phi[i] - Eigen::Matrix2d::Identity()) * v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> bsvd(cob, Eigen::ComputeFullU);
    Eigen::VectorXd bsv = bsvd.singularValues();
    int brank = 0;
    for (int i = 0; i < bsv.size(); ++i)
        if (bsv(i) > 1e-10 * std::max(1.0, bsv(0))) ++brank;
    out.dim_coboundaries = brank;
    Eigen::MatrixXd qb = bsvd.matrixU().leftCols(brank);

    Eigen::MatrixXd proj = z - qb * (qb.transpose() * z);
    Eigen::JacobiSVD<Eigen::MatrixXd> psvd(proj, Eigen::ComputeFullU | Eigen::ComputeThinV);
    Eigen::VectorXd psv = psvd.singularValues();
    double ptop = psv.size() ? psv(0) : 0;
    int prank = 0;
    for (int i = 0; i < psv.size(); ++i)
        if (psv(i) > tol * std::max(1.0, ptop)) ++prank;
    out.basis = psvd.matrixU().leftCols(prank);
    out.min_sv = prank ? psv(prank - 1) : 0;
    return out;
}

} // namespace

CocycleBasis restricted_h1(const SurfaceRep& rep, double tol) {
    BasisData data = build_basis(rep, tol);
    CocycleBasis out;
    out.g = rep.g;
    out.n = rep.n;
    out.ambient = int(data.basis.rows());
    out.dim = int(data.basis.cols());
    out.dim_cocycles = data.dim_cocycles;
    out.dim_coboundaries = data.dim_coboundaries;
    out.min_singular_value = data.min_sv;
    for (int c = 0; c < out.dim; ++c) {
        std::vector<double> col(out.ambient);
        for (int r = 0; r < out.ambient; ++r) col[r] = data.basis(r, c);
        out.basis.push_back(std::move(col));
    }
    return out;
}

double cup_pairing(const std::vector<double>& u, const std::vector<double>& v,
                   const SurfaceRep& rep) {
    int ambient = 2 * (2 * rep.g + rep.n);
    if (int(u.size()) != ambient || int(v.size()) != ambient)
        fail(errc::bad_input, "cocycle vectors must have one R^2 slot per generator");
    std::vector<Eigen::Matrix2d> phi;
    for (const Mat2& m : generator_images(rep)) phi.push_back(to_eigen(m));
    auto letters = relator_letters(rep.g, rep.n);
    Eigen::VectorXd ue(ambient), ve(ambient);
    for (int i = 0; i < ambient; ++i) {
        ue(i) = u[i];
        ve(i) = v[i];
    }
    // symmetrized: the relative form Q_R; orientation fixed by sign = 2T + rho
    return -0.5 * (cup_raw(phi, letters, rep.g, rep.n, ue, ve) +
                   cup_raw(phi, letters, rep.g, rep.n, ve, ue));
}

OracleReport direct_signature(const SurfaceRep& rep, double tol) {
    BasisData data = build_basis(rep, tol);
    int d = int(data.basis.cols());
    Eigen::MatrixXd gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            double raw_ij = cup_raw(data.phi, data.letters, rep.g, rep.n, data.basis.col(i),
                                    data.basis.col(j));
            double raw_ji = cup_raw(data.phi, data.letters, rep.g, rep.n, data.basis.col(j),
                                    data.basis.col(i));
            gram(i, j) = gram(j, i) = -0.5 * (raw_ij + raw_ji);
        }
    OracleReport out;
    out.dim = d;
    out.min_singular_value = data.min_sv;
    out.skew_residual =
        d ? (gram - gram.transpose()).norm() / std::max(1e-300, gram.norm()) : 0.0;
    long plus = 0, minus = 0;
    if (d) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
        Eigen::VectorXd ev = es.eigenvalues();
        double norm = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
        out.min_abs_eigenvalue = ev.cwiseAbs().minCoeff() / norm;
        for (int i = 0; i < d; ++i) {
            double rel = ev(i) / norm;
            if (std::abs(rel) > 0.1 * tol && std::abs(rel) < 10 * tol)
                fail(errc::degenerate_form, "eigenvalue " + std::to_string(ev(i)) +
                                                " inside the tolerance band");
            if (rel > tol) ++plus;
            else if (rel < -tol) ++minus;
        }
    }
    out.signature_direct = plus - minus;
    out.signature_formula = signature(rep);
    out.match = out.signature_direct == out.signature_formula;
    return out;
}

} // namespace slr
