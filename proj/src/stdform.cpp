#include "braidalg/stdform.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "braidalg/errors.hpp"

namespace braidalg {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> char_eval(const CharLabel& label, const std::vector<double>& angles) {
    double arg = 0.0;
    for (size_t i = 0; i < label.size(); ++i) arg += angles[i] * static_cast<double>(label[i]);
    return {std::cos(arg), std::sin(arg)};
}

CharLabel label_add(const CharLabel& a, const CharLabel& b) {
    CharLabel r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

CharLabel label_sub(const CharLabel& a, const CharLabel& b) {
    CharLabel r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

CharLabel label_neg(const CharLabel& a) {
    CharLabel r = a;
    for (auto& x : r) x = -x;
    return r;
}

bool is_unitary(const CMat& m, double tol) {
    return (m * m.adjoint() - CMat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() < tol;
}

} // namespace

std::complex<double> NumericBichar::eval(const CharLabel& a, const CharLabel& b) const {
    std::complex<double> acc(1.0, 0.0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            acc *= std::pow(vals[i][j], static_cast<double>(a[i] * b[j]));
        }
    }
    // renormalize to the unit circle against pow() drift
    return acc / std::abs(acc);
}

PolarResult polar_antilinear(const CMat& a, double tol) {
    const auto m = a.rows();
    if (std::abs(a.determinant()) < tol) throw SingularMatrix("polar_antilinear: singular matrix");
    CMat gram = a.transpose() * a.conjugate(); // |AJ|^2
    Eigen::SelfAdjointEigenSolver<CMat> es(gram);
    if (es.info() != Eigen::Success) throw Error("eigendecomposition failed");
    CVec sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<std::complex<double>>();
    CMat p = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();
    CMat mu = a * p.conjugate().inverse();
    PolarResult r;
    r.mu = mu;
    r.p = p;
    r.residual = (mu * p.conjugate() - a).cwiseAbs().maxCoeff();
    (void)m;
    return r;
}

CMat StandardForm::assemble_a() const {
    size_t m = 0;
    for (const auto& b : blocks) m += static_cast<size_t>(b.size);
    CMat r = CMat::Zero(static_cast<long>(m), static_cast<long>(m));
    long off = 0;
    for (const auto& b : blocks) {
        if (b.size == 1) {
            r(off, off) = 1.0;
        } else {
            r(off, off + 1) = b.theta / b.lambda;
            r(off + 1, off) = b.lambda;
        }
        off += b.size;
    }
    return r;
}

CVec StandardForm::assemble_x(const std::vector<double>& angles, const CharLabel& w0) const {
    size_t m = 0;
    for (const auto& b : blocks) m += static_cast<size_t>(b.size);
    CVec r(static_cast<long>(m));
    long off = 0;
    for (const auto& b : blocks) {
        r(off) = char_eval(b.chi, angles);
        if (b.size == 2) r(off + 1) = char_eval(label_sub(w0, b.chi), angles);
        off += b.size;
    }
    return r;
}

StandardForm standard_form(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w0,
                           double tol) {
    const long m = a.rows();
    if (m < 2 || a.cols() != m || static_cast<long>(x.size()) != m)
        throw HypothesisViolated("standard_form: bad dimensions");
    if (!is_unitary(a * a.conjugate(), 100 * tol))
        throw HypothesisViolated("standard_form: A Abar is not unitary");
    // support condition A_ij != 0 => chi_i = w0 - chi_j
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            if (std::abs(a(i, j)) > tol && !(x[static_cast<size_t>(i)] ==
                                             label_sub(w0, x[static_cast<size_t>(j)])))
                throw HypothesisViolated("standard_form: A(w0 Xbar)A^{-1} = X fails on labels");

    PolarResult pol = polar_antilinear(a, tol);
    CMat usq = pol.mu * pol.mu.conjugate(); // u^2, linear and unitary

    const double cluster_tol = 1e-8;
    StandardForm out;
    out.degenerate_warning = false;

    // group indices by exact label
    std::map<CharLabel, std::vector<long>> by_label;
    for (long i = 0; i < m; ++i) by_label[x[static_cast<size_t>(i)]].push_back(i);

    // joint eigenspaces H_{lambda, theta, chi}: map key -> column basis
    struct Space {
        double lambda;
        std::complex<double> theta;
        CharLabel chi;
        CMat basis; // m x dim, orthonormal
    };
    std::vector<Space> spaces;
    for (const auto& [label, idx] : by_label) {
        CMat proj(m, static_cast<long>(idx.size()));
        proj.setZero();
        for (size_t k = 0; k < idx.size(); ++k) proj(idx[k], static_cast<long>(k)) = 1.0;
        // restrict |AJ| to the label space (it commutes with X)
        CMat prest = proj.adjoint() * pol.p * proj;
        Eigen::SelfAdjointEigenSolver<CMat> es(prest);
        // cluster eigenvalues
        std::vector<double> evs(es.eigenvalues().data(),
                                es.eigenvalues().data() + es.eigenvalues().size());
        size_t pos = 0;
        while (pos < evs.size()) {
            size_t end = pos;
            while (end + 1 < evs.size() && std::abs(evs[end + 1] - evs[pos]) < cluster_tol) ++end;
            double lambda = evs[pos];
            CMat basis = proj * es.eigenvectors().middleCols(static_cast<long>(pos),
                                                             static_cast<long>(end - pos + 1));
            if (end + 1 < evs.size() && std::abs(evs[end + 1] - evs[pos]) < 10 * cluster_tol)
                out.degenerate_warning = true;
            // split by u^2 within the (lambda, chi)-space
            CMat urest = basis.adjoint() * usq * basis;
            Eigen::ComplexEigenSolver<CMat> ues(urest);
            std::vector<std::pair<double, long>> order;
            for (long k = 0; k < urest.rows(); ++k)
                order.push_back({std::arg(ues.eigenvalues()(k)), k});
            std::sort(order.begin(), order.end());
            size_t upos = 0;
            while (upos < order.size()) {
                size_t uend = upos;
                while (uend + 1 < order.size() &&
                       std::abs(order[uend + 1].first - order[upos].first) < cluster_tol)
                    ++uend;
                std::complex<double> theta = ues.eigenvalues()(order[upos].second);
                theta /= std::abs(theta);
                CMat cols(m, static_cast<long>(uend - upos + 1));
                for (size_t k = upos; k <= uend; ++k)
                    cols.col(static_cast<long>(k - upos)) =
                        basis * ues.eigenvectors().col(order[k].second);
                // orthonormalize (eigenvectors of a normal matrix restricted
                // to a cluster may not be orthogonal numerically)
                Eigen::HouseholderQR<CMat> qr(cols);
                CMat q = qr.householderQ() * CMat::Identity(m, cols.cols());
                spaces.push_back({lambda, theta, label, q});
                upos = uend + 1;
            }
            pos = end + 1;
        }
    }

    // deterministic processing order
    std::sort(spaces.begin(), spaces.end(), [](const Space& a1, const Space& b1) {
        if (a1.chi != b1.chi) return a1.chi < b1.chi;
        if (std::abs(a1.lambda - b1.lambda) > 1e-12) return a1.lambda < b1.lambda;
        return std::arg(a1.theta) < std::arg(b1.theta);
    });

    auto find_space = [&](double lambda, std::complex<double> theta, const CharLabel& chi,
                          double ltol) -> Space* {
        for (auto& s : spaces)
            if (s.chi == chi && std::abs(s.lambda - lambda) < ltol &&
                std::abs(s.theta - theta) < 1e-6)
                return &s;
        return nullptr;
    };

    auto apply_u = [&](const CVec& xi) -> CVec { return pol.mu * xi.conjugate(); };

    auto phase_normalize = [&](CVec v) -> CVec {
        for (long i = 0; i < v.size(); ++i) {
            if (std::abs(v(i)) > 1e-7) {
                std::complex<double> ph = v(i) / std::abs(v(i));
                return v / ph;
            }
        }
        return v;
    };

    std::vector<CVec> new_basis;
    std::vector<Block> blocks;
    std::vector<bool> used(spaces.size(), false);

    for (size_t si = 0; si < spaces.size(); ++si) {
        if (used[si]) continue;
        Space& s = spaces[si];
        CharLabel chi_mirror = label_sub(w0, s.chi);
        bool self_paired = (s.chi == chi_mirror) && std::abs(s.lambda - 1.0) < 1e-7 &&
                           std::abs(s.theta.imag()) < 1e-7;
        if (!self_paired) {
            // choose the representative of the pair
            bool rep = false;
            if (s.lambda < 1.0 - 1e-9) {
                rep = true;
            } else if (std::abs(s.lambda - 1.0) <= 1e-9) {
                double argt = std::arg(s.theta);
                if (argt > 1e-9 && argt <= kPi + 1e-9) {
                    rep = true;
                } else if (std::abs(argt) <= 1e-9) {
                    // theta = 1, chi^2 != w0: lexicographically smaller label
                    rep = s.chi < chi_mirror;
                }
            }
            if (!rep) continue; // partner handles it
            Space* partner = find_space(1.0 / s.lambda, std::conj(s.theta), chi_mirror, 1e-6);
            if (!partner || partner == &s)
                throw HypothesisViolated("standard_form: unpaired eigenspace");
            used[si] = true;
            used[static_cast<size_t>(partner - spaces.data())] = true;
            for (long c = 0; c < s.basis.cols(); ++c) {
                CVec xi = phase_normalize(s.basis.col(c));
                xi.normalize();
                CVec eta = apply_u(xi); // antiunitary, already unit norm
                new_basis.push_back(xi);
                new_basis.push_back(eta);
                Block b;
                b.size = 2;
                b.lambda = s.lambda;
                b.theta = s.theta;
                b.chi = s.chi;
                blocks.push_back(b);
            }
        } else {
            used[si] = true;
            if (s.theta.real() < 0.0) {
                // case 2: lambda = 1, theta = -1: pair xi with u xi
                CMat rem = s.basis;
                while (rem.cols() > 0) {
                    CVec xi = phase_normalize(rem.col(0));
                    xi.normalize();
                    CVec eta = apply_u(xi);
                    eta.normalize();
                    new_basis.push_back(xi);
                    new_basis.push_back(eta);
                    Block b;
                    b.size = 2;
                    b.lambda = 1.0;
                    b.theta = std::complex<double>(-1.0, 0.0);
                    b.chi = s.chi;
                    blocks.push_back(b);
                    // project xi, eta out of the remaining basis
                    CMat cols(m, 2);
                    cols.col(0) = xi;
                    cols.col(1) = eta;
                    CMat coeff = cols.adjoint() * rem;
                    CMat reduced = rem - cols * coeff;
                    Eigen::ColPivHouseholderQR<CMat> qr(reduced);
                    qr.setThreshold(1e-7);
                    long rank = qr.rank();
                    CMat q = qr.householderQ() * CMat::Identity(m, rank);
                    rem = q;
                }
            } else {
                // case 3: lambda = 1, theta = 1: real form { xi : u xi = xi }
                long dim = s.basis.cols();
                std::vector<CVec> real_form;
                for (long cidx = 0; cidx < dim && static_cast<long>(real_form.size()) < dim;
                     ++cidx) {
                    for (std::complex<double> ph :
                         {std::complex<double>(1, 0), std::complex<double>(0, 1)}) {
                        CVec cand = ph * s.basis.col(cidx);
                        CVec v = cand + apply_u(cand);
                        // orthogonalize against existing real-form vectors
                        for (const auto& w : real_form) v -= w * (w.adjoint() * v);
                        if (v.norm() > 1e-6) {
                            v.normalize();
                            v = phase_normalize(v);
                            // re-symmetrize: u v should equal v
                            v = 0.5 * (v + apply_u(v));
                            v.normalize();
                            for (const auto& w : real_form) v -= w * (w.adjoint() * v);
                            if (v.norm() > 1e-6) {
                                v.normalize();
                                real_form.push_back(v);
                            }
                        }
                        if (static_cast<long>(real_form.size()) == dim) break;
                    }
                }
                if (static_cast<long>(real_form.size()) != dim)
                    throw HypothesisViolated("standard_form: real form extraction failed");
                for (const auto& xi : real_form) {
                    new_basis.push_back(xi);
                    Block b;
                    b.size = 1;
                    b.lambda = 1.0;
                    b.theta = std::complex<double>(1.0, 0.0);
                    b.chi = s.chi;
                    blocks.push_back(b);
                }
            }
        }
    }

    size_t total = 0;
    for (const auto& b : blocks) total += static_cast<size_t>(b.size);
    if (total != static_cast<size_t>(m))
        throw HypothesisViolated("standard_form: block sizes do not sum to m");

    CMat basis_mat(m, m);
    for (long c = 0; c < m; ++c) basis_mat.col(c) = new_basis[static_cast<size_t>(c)];
    out.v = basis_mat.adjoint();
    out.blocks = blocks;

    // residuals
    CMat assembled = out.assemble_a();
    out.residual_a = (out.v * a * out.v.transpose() - assembled).cwiseAbs().maxCoeff();
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> ud(0.0, 2.0 * kPi);
    double rx = 0.0;
    for (int t = 0; t < 10; ++t) {
        std::vector<double> angles(w0.size());
        for (auto& th : angles) th = ud(rng);
        CVec xdiag(m);
        for (long i = 0; i < m; ++i) xdiag(i) = char_eval(x[static_cast<size_t>(i)], angles);
        CMat xm = xdiag.asDiagonal();
        CVec want = out.assemble_x(angles, w0);
        CMat got = out.v * xm * out.v.adjoint();
        rx = std::max(rx, (got - CMat(want.asDiagonal())).cwiseAbs().maxCoeff());
    }
    out.residual_x = rx;
    return out;
}

TlForm tl_form(const CMat& a, double tol) {
    // trivial-label standard form, then interleave blocks antidiagonally
    const long m = a.rows();
    std::vector<CharLabel> labels(static_cast<size_t>(m), CharLabel{0});
    StandardForm sf = standard_form(a, labels, CharLabel{0}, tol);
    // assemble: block i occupies antidiagonal positions (i, m-i+1)
    std::vector<CVec> first_half, second_half;
    std::vector<std::complex<double>> lower, upper;
    long off = 0;
    std::optional<CVec> middle;
    std::optional<std::complex<double>> middle_entry;
    std::vector<CVec> basis_cols;
    for (long c = 0; c < m; ++c) basis_cols.push_back(sf.v.row(c).adjoint());
    for (const auto& b : sf.blocks) {
        if (b.size == 2) {
            first_half.push_back(basis_cols[static_cast<size_t>(off)]);
            second_half.push_back(basis_cols[static_cast<size_t>(off + 1)]);
            lower.push_back(b.lambda);
            upper.push_back(b.theta / b.lambda);
        } else {
            if (middle) {
                // pair two 1x1 blocks into an antidiagonal 2x2 via xi +- i eta
                CVec xi = *middle;
                CVec eta = basis_cols[static_cast<size_t>(off)];
                CVec plus = (xi + std::complex<double>(0, 1) * eta) / std::sqrt(2.0);
                CVec minus = (xi - std::complex<double>(0, 1) * eta) / std::sqrt(2.0);
                first_half.push_back(plus);
                second_half.push_back(minus);
                lower.push_back(1.0);
                upper.push_back(1.0);
                middle.reset();
            } else {
                middle = basis_cols[static_cast<size_t>(off)];
                middle_entry = 1.0;
            }
        }
        off += b.size;
    }
    TlForm out;
    std::vector<CVec> ordered;
    std::vector<std::complex<double>> anti(static_cast<size_t>(m));
    size_t k = first_half.size();
    for (size_t i = 0; i < k; ++i) ordered.push_back(first_half[i]);
    if (middle) ordered.push_back(*middle);
    for (size_t i = 0; i < k; ++i) ordered.push_back(second_half[k - 1 - i]);
    // antidiagonal entries a_i with (vAv^t)_{m-i+1, i} = a_i
    for (size_t i = 0; i < k; ++i) {
        anti[i] = lower[i];
        anti[static_cast<size_t>(m) - 1 - i] = upper[i];
    }
    if (middle) anti[k] = *middle_entry;
    CMat basis(m, m);
    for (long c = 0; c < m; ++c) basis.col(c) = ordered[static_cast<size_t>(c)];
    out.v = basis.adjoint();
    CMat form = out.v * a * out.v.transpose();
    double res = 0.0;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            std::complex<double> want =
                (j == m - 1 - i) ? anti[static_cast<size_t>(m - 1 - i)] : 0.0;
            res = std::max(res, std::abs(form(i, j) - want));
        }
    out.antidiag = anti;
    out.residual = res;
    return out;
}

MrozinskiResult check_mrozinski(const CMat& b, double tol, int exponent_bound) {
    MrozinskiResult out;
    const long m = b.rows();
    CMat bb = b * b.conjugate();
    if (!is_unitary(bb, 1e-8)) throw NotUnitary("check_mrozinski: B Bbar is not unitary");
    Eigen::ComplexEigenSolver<CMat> es(bb);
    std::vector<std::complex<double>> mus;
    for (long i = 0; i < m; ++i) {
        std::complex<double> mu = es.eigenvalues()(i);
        mus.push_back(mu / std::abs(mu));
    }
    std::sort(mus.begin(), mus.end(), [](const auto& p, const auto& q) {
        return std::arg(p) < std::arg(q);
    });
    out.spectrum = mus;
    if (m % 2 != 0) {
        out.reason = "m is odd";
        return out;
    }
    // odd exponents ordered by increasing magnitude: 1, -1, 3, -3, ...
    std::vector<int> odd_by_magnitude;
    for (int o = 1; o <= exponent_bound; o += 2) {
        odd_by_magnitude.push_back(o);
        odd_by_magnitude.push_back(-o);
    }
    auto match = [&](std::complex<double> lambda) -> std::optional<std::vector<int64_t>> {
        std::vector<int64_t> exps;
        for (const auto& mu : mus) {
            bool found = false;
            for (int o : odd_by_magnitude) {
                std::complex<double> p = std::pow(lambda, static_cast<double>(o));
                if (std::abs(p - mu) < tol) {
                    exps.push_back(o);
                    found = true;
                    break;
                }
            }
            if (!found) return std::nullopt;
        }
        return exps;
    };
    for (const auto& mu : mus) {
        for (int o = 1; o <= exponent_bound; o += 2) {
            for (int s = 0; s < o; ++s) {
                double arg = (std::arg(mu) + 2.0 * kPi * s) / o;
                std::complex<double> lambda(std::cos(arg), std::sin(arg));
                auto exps = match(lambda);
                if (exps) {
                    out.pass = true;
                    out.lambda = lambda;
                    out.odd_exponents = *exps;
                    for (int64_t o2 : *exps) out.l.push_back((o2 - 1) / 2);
                    return out;
                }
            }
        }
    }
    out.reason = "no unimodular lambda realizes the spectrum as odd powers within bound " +
                 std::to_string(exponent_bound);
    return out;
}

namespace {

struct BlockKey {
    int size;
    int64_t lambda_q; // quantized
    int64_t theta_q;
    CharLabel chi_lo, chi_hi; // unordered pair {chi, w0 - chi} sorted

    bool operator<(const BlockKey& o) const {
        return std::tie(size, lambda_q, theta_q, chi_lo, chi_hi) <
               std::tie(o.size, o.lambda_q, o.theta_q, o.chi_lo, o.chi_hi);
    }
    bool operator==(const BlockKey& o) const {
        return std::tie(size, lambda_q, theta_q, chi_lo, chi_hi) ==
               std::tie(o.size, o.lambda_q, o.theta_q, o.chi_lo, o.chi_hi);
    }
};

BlockKey key_of(const Block& b, const CharLabel& w0, double scale) {
    BlockKey k;
    k.size = b.size;
    k.lambda_q = static_cast<int64_t>(std::llround(b.lambda * scale));
    double th = std::arg(b.theta);
    k.theta_q = static_cast<int64_t>(std::llround(th * scale));
    CharLabel mirror = label_sub(w0, b.chi);
    k.chi_lo = std::min(b.chi, mirror);
    k.chi_hi = std::max(b.chi, mirror);
    return k;
}

} // namespace

IsoResult check_iso_conditions(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w,
                               const CMat& a2, const std::vector<CharLabel>& x2,
                               const CharLabel& w2, const NumericBichar& beta, double tol) {
    IsoResult out;
    if (a.rows() != a2.rows()) {
        out.reason = "dimension mismatch";
        return out;
    }
    const long m = a.rows();

    // candidate characters chi with multiset {x_i} == chi + {x'_j}
    std::vector<CharLabel> candidates;
    auto add_candidate = [&](const CharLabel& chi) {
        std::multiset<CharLabel> left(x.begin(), x.end()), right;
        for (const auto& l : x2) right.insert(label_add(chi, l));
        if (left == right) {
            for (const auto& c : candidates)
                if (c == chi) return;
            candidates.push_back(chi);
        }
    };
    // torsion-free: the only possible candidate is w - w'; the label
    // difference enumeration below covers it and any multiset coincidences.
    add_candidate(label_sub(w, w2));
    for (const auto& xi : x)
        for (const auto& xj : x2) add_candidate(label_sub(xi, xj));

    for (const auto& chi : candidates) {
        // the standard forms must share w0: 2w - 2chi == 2w'
        if (!(label_sub(label_add(w, w), label_add(chi, chi)) == label_add(w2, w2))) continue;
        CMat d = CMat::Zero(m, m);
        for (long i = 0; i < m; ++i)
            d(i, i) = beta.eval(label_neg(x[static_cast<size_t>(i)]), chi);
        CMat ad = a * d;
        std::vector<CharLabel> x_shift;
        for (const auto& l : x) x_shift.push_back(label_sub(l, chi));
        CharLabel w0 = label_add(w2, w2);
        StandardForm sf1, sf2;
        try {
            sf1 = standard_form(ad, x_shift, w0, 1e-10);
            sf2 = standard_form(a2, x2, w0, 1e-10);
        } catch (const Error&) {
            continue;
        }
        // compare block multisets
        double scale = 1.0 / tol;
        std::multiset<BlockKey> k1, k2;
        for (const auto& b : sf1.blocks) k1.insert(key_of(b, w0, scale));
        for (const auto& b : sf2.blocks) k2.insert(key_of(b, w0, scale));
        if (!(k1 == k2)) continue;
        // align blocks of sf1 to sf2 by key, building a permutation
        std::vector<long> offset1(sf1.blocks.size()), offset2(sf2.blocks.size());
        long off = 0;
        for (size_t i = 0; i < sf1.blocks.size(); ++i) {
            offset1[i] = off;
            off += sf1.blocks[i].size;
        }
        off = 0;
        for (size_t i = 0; i < sf2.blocks.size(); ++i) {
            offset2[i] = off;
            off += sf2.blocks[i].size;
        }
        std::vector<bool> taken(sf1.blocks.size(), false);
        CMat perm = CMat::Zero(m, m);
        bool ok = true;
        for (size_t j = 0; j < sf2.blocks.size() && ok; ++j) {
            BlockKey want = key_of(sf2.blocks[j], w0, scale);
            bool found = false;
            for (size_t i = 0; i < sf1.blocks.size(); ++i) {
                if (taken[i]) continue;
                if (!(key_of(sf1.blocks[i], w0, scale) < want) &&
                    !(want < key_of(sf1.blocks[i], w0, scale)) &&
                    sf1.blocks[i].chi == sf2.blocks[j].chi) {
                    taken[i] = true;
                    for (int t = 0; t < sf1.blocks[i].size; ++t)
                        perm(offset2[j] + t, offset1[i] + t) = 1.0;
                    found = true;
                    break;
                }
            }
            if (!found) {
                // allow the chi <-> w0 - chi swap for a_i = 1, theta = 1 blocks
                for (size_t i = 0; i < sf1.blocks.size(); ++i) {
                    if (taken[i]) continue;
                    if (!(key_of(sf1.blocks[i], w0, scale) < want) &&
                        !(want < key_of(sf1.blocks[i], w0, scale)) &&
                        sf1.blocks[i].size == 2 &&
                        std::abs(sf1.blocks[i].lambda - 1.0) < tol &&
                        std::abs(sf1.blocks[i].theta - 1.0) < 1e-6 &&
                        label_sub(w0, sf1.blocks[i].chi) == sf2.blocks[j].chi) {
                        taken[i] = true;
                        // swap the two columns of the block
                        perm(offset2[j] + 1, offset1[i]) = 1.0;
                        perm(offset2[j], offset1[i] + 1) = 1.0;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) ok = false;
        }
        if (!ok) continue;
        CMat v = sf2.v.adjoint() * perm * sf1.v;
        double res = std::max((v * ad * v.transpose() - a2).cwiseAbs().maxCoeff(),
                              (v * v.adjoint() - CMat::Identity(m, m)).cwiseAbs().maxCoeff());
        if (res < 1e-6) {
            out.iso = true;
            out.v = v;
            out.chi = chi;
            return out;
        }
    }
    out.reason = "standard forms differ for every candidate character";
    return out;
}

BfoNumeric check_bfo_numeric(const CMat& a, const std::vector<CharLabel>& x, const CharLabel& w,
                             const NumericBichar& beta, double tol) {
    BfoNumeric out;
    const long m = a.rows();
    CMat lhs = a * a.conjugate();
    CVec tw(m);
    for (long i = 0; i < m; ++i) {
        std::complex<double> v = beta.eval(x[static_cast<size_t>(i)], w);
        tw(i) = 1.0 / (v * v); // X(t_w)^{-2} diagonal entry
    }
    std::complex<double> c = lhs(0, 0) / tw(0);
    double res = 0.0;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            std::complex<double> want = (i == j) ? c * tw(i) : 0.0;
            res = std::max(res, std::abs(lhs(i, j) - want));
        }
    out.c = c;
    out.residual = res;
    if (res > tol || std::abs(std::abs(c) - 1.0) > tol) {
        out.reason = "A Abar != c X(t_w)^{-2}";
        return out;
    }
    std::complex<double> bw = beta.eval(w, w);
    std::complex<double> tau = c / (bw * bw);
    if (std::abs(tau - 1.0) < tol) {
        out.tau = 1;
    } else if (std::abs(tau + 1.0) < tol) {
        out.tau = -1;
    } else {
        out.reason = "tau = c beta(w,w)^{-2} is not +-1";
        return out;
    }
    if (m % 2 == 1 && out.tau == -1) {
        out.odd_m_impossible = true;
        out.reason = "odd m forces tau = +1";
        return out;
    }
    out.ok = true;
    return out;
}

} // namespace braidalg
