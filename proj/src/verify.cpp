#include "hcw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "hcw/bispherical.hpp"
#include "hcw/cartanweyl.hpp"
#include "hcw/cayley.hpp"
#include "hcw/hurwitz.hpp"
#include "hcw/ksmap.hpp"
#include "hcw/laplace.hpp"
#include "hcw/linalg.hpp"
#include "hcw/param.hpp"
#include "hcw/poly_parse.hpp"
#include "hcw/random_util.hpp"

namespace hcw::verify {

const char* kVersion = "0.1.0";

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = std::pair<bool, std::string>;

template <typename Fn>
void run_case(std::vector<CaseResult>& out, const std::string& name, Fn&& fn) {
    CaseResult r;
    r.name = name;
    auto start = Clock::now();
    try {
        Outcome o = fn();
        r.passed = o.first;
        r.residual_summary = o.second;
    } catch (const std::exception& e) {
        r.passed = false;
        r.residual_summary = std::string("exception: ") + e.what();
    }
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    out.push_back(std::move(r));
}

Outcome pass(std::string s) { return {true, std::move(s)}; }
Outcome fail(std::string s) { return {false, std::move(s)}; }

PolyMatrix scaled_identity(int n, const MultiPoly& s) {
    return PolyMatrix::identity(n, MultiPoly::zero(s.vars())).scale(s);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

}  // namespace

std::vector<CaseResult> hurwitz_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    for (int n : {2, 4, 8}) {
        run_case(out, "hurwitz.orthogonality.n" + std::to_string(n) + ".symbolic", [n]() {
            PolyMatrix h = hurwitz::build_hurwitz_symbolic(n);
            MultiPoly r = norm_sq_poly(u_vars(n));
            if (h * h.transpose() != scaled_identity(n, r)) return fail("nonzero residual");
            return pass("zero residual");
        });
        run_case(out, "hurwitz.orthogonality.n" + std::to_string(n) + ".random100",
                 [n, seed]() {
                     std::mt19937_64 rng(case_seed(seed, "hurwitz.orth.n" + std::to_string(n)));
                     for (int t = 0; t < 100; ++t) {
                         ParamVector u = random_param_vector(n, rng, false);
                         ExactMatrix h = hurwitz::build_hurwitz(n, u);
                         ExactMatrix target =
                             ExactMatrix::identity(n, Rational(0)).scale(norm_sq(u));
                         if (h * h.transpose() != target)
                             return fail("residual at trial " + std::to_string(t));
                     }
                     return pass("100 exact trials");
                 });
    }

    run_case(out, "hurwitz.orthogonality.n16.rejected", [seed]() {
        if (hurwitz::doubling_is_orthogonal())
            return fail("a sign variant unexpectedly satisfied the identity");
        std::mt19937_64 rng(case_seed(seed, "hurwitz.orth.n16"));
        ParamVector u = random_param_vector(16, rng);
        try {
            hurwitz::build_hurwitz(16, u);
        } catch (const std::domain_error&) {
            return pass("no orthogonal doubling exists; build fails loudly as designed");
        }
        return fail("build did not reject the non-orthogonal doubling");
    });

    run_case(out, "hurwitz.skew.antisymmetric", []() {
        for (int n : {2, 4, 8}) {
            PolyMatrix s = hurwitz::skew_part_symbolic(n);
            if (s.transpose() != -s) return fail("skew part not antisymmetric at n=" +
                                                 std::to_string(n));
            PolyMatrix h = hurwitz::build_hurwitz_symbolic(n);
            VarList vars = u_vars(n);
            PolyMatrix u1_id = scaled_identity(n, MultiPoly::variable_at(vars, 0));
            if (h != u1_id + s) return fail("H != u1 I + S at n=" + std::to_string(n));
        }
        return pass("zero residual");
    });

    for (int n : {4, 8}) {
        run_case(out, "hurwitz.clifford.n" + std::to_string(n), [n]() {
            auto gammas = hurwitz::clifford_factors(n);
            ExactMatrix id = ExactMatrix::identity(n, Rational(0));
            for (size_t a = 0; a < gammas.size(); ++a)
                for (size_t b = 0; b < gammas.size(); ++b) {
                    ExactMatrix anti = gammas[a] * gammas[b] + gammas[b] * gammas[a];
                    ExactMatrix expect = (a == b) ? id.scale(Rational(-2))
                                                  : ExactMatrix(n, n, Rational(0));
                    if (anti != expect)
                        return fail("pair (" + std::to_string(a + 2) + "," +
                                    std::to_string(b + 2) + ")");
                }
            // reconstruction: u1 I - sum u_i Gamma_i^t = H, symbolically
            VarList vars = u_vars(n);
            PolyMatrix acc = scaled_identity(n, MultiPoly::variable_at(vars, 0));
            for (int k = 2; k <= n; ++k) {
                ExactMatrix gt = gammas[k - 2].transpose();
                MultiPoly uk = MultiPoly::variable_at(vars, k - 1);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (!gt.at(i, j).is_zero()) acc.at(i, j) -= uk * gt.at(i, j);
            }
            if (acc != hurwitz::build_hurwitz_symbolic(n)) return fail("reconstruction residual");
            return pass("anticommutation and reconstruction exact");
        });
    }

    run_case(out, "hurwitz.clifford.n16.rejected", []() {
        try {
            hurwitz::clifford_factors(16);
        } catch (const std::domain_error&) {
            return pass("rejected as designed");
        }
        return fail("did not reject n=16");
    });

    return out;
}

std::vector<CaseResult> cayley_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    for (int n : {2, 3, 7}) {
        run_case(out, "cayley.certificate.n" + std::to_string(n), [n]() {
            const auto& o = cayley::cayley_transform_symbolic(n);  // certified inside
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!o.matrix.at(i, j).is_zero() && !o.matrix.at(i, j).is_homogeneous(2))
                        return fail("entry not a quadratic form");
            PolyMatrix prod = o.matrix * o.matrix.transpose();
            if (prod != scaled_identity(n, o.scale_sq * o.scale_sq))
                return fail("O O^t != (|u|^2)^2 I");
            return pass("defining relations and scaled orthogonality exact");
        });
    }

    for (int n : {5, 9}) {
        run_case(out, "cayley.nonpolynomial.n" + std::to_string(n) + ".witnessed", [n]() {
            try {
                cayley::cayley_transform_symbolic(n);
            } catch (const std::domain_error& e) {
                return pass(std::string("rejected with exact witness: ") + e.what());
            }
            return fail("symbolic build unexpectedly succeeded");
        });
        run_case(out, "cayley.orthogonality.n" + std::to_string(n) + ".random100",
                 [n, seed]() {
                     std::mt19937_64 rng(
                         case_seed(seed, "cayley.orth.n" + std::to_string(n)));
                     const int np = hurwitz::minor_param_count(n);
                     for (int t = 0; t < 100; ++t) {
                         ParamVector u = random_cayley_point(np, rng);
                         auto o = cayley::cayley_transform(n, u);
                         Rational r2 = o.scale_sq * o.scale_sq;
                         ExactMatrix target = ExactMatrix::identity(n, Rational(0)).scale(r2);
                         if (o.matrix * o.matrix.transpose() != target)
                             return fail("O O^t residual at trial " + std::to_string(t));
                         // defining relations replayed exactly at the point
                         ExactMatrix a = hurwitz::minor_full(n, u);
                         ExactMatrix rhs = a.transpose().scale(o.scale_sq);
                         if (a * o.matrix != rhs || o.matrix * a != rhs)
                             return fail("defining relation residual at trial " +
                                         std::to_string(t));
                     }
                     return pass("100 exact trials: orthogonality and defining relations");
                 });
    }

    for (int n : {3, 7}) {
        run_case(out, "cayley.closedform.n" + std::to_string(n), [n]() {
            if (cayley::weyl_form_symbolic(n) != cayley::cayley_transform_symbolic(n).matrix)
                return fail("closed form differs from the transform");
            return pass("identical polynomial matrices");
        });
    }

    run_case(out, "cayley.printed3x3.verbatim", []() {
        VarList v = u_vars(4);
        const char* rows[3][3] = {
            {"u1^2 - u2^2 - u3^2 + u4^2", "-2*u2*u1 - 2*u3*u4", "-2*u3*u1 + 2*u2*u4"},
            {"2*u2*u1 - 2*u4*u3", "u1^2 - u2^2 + u3^2 - u4^2", "-2*u1*u4 - 2*u2*u3"},
            {"2*u3*u1 + 2*u2*u4", "2*u1*u4 - 2*u2*u3", "u1^2 + u2^2 - u3^2 - u4^2"},
        };
        const PolyMatrix& o = cayley::cayley_transform_symbolic(3).matrix;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (o.at(i, j) != parse_poly(rows[i][j], v))
                    return fail("entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") differs");
        return pass("all nine entries verbatim");
    });

    for (int n : {3, 7}) {
        run_case(out, "cayley.block_identity.n" + std::to_string(n), [n]() {
            auto rep = cayley::block_identity(n);
            if (!rep.passed) return fail("nonzero residual matrix");
            return pass("zero residual");
        });
    }

    run_case(out, "cayley.determinant.random", [seed]() {
        std::mt19937_64 rng(case_seed(seed, "cayley.det"));
        for (int n : {2, 3, 5, 7, 9}) {
            for (int t = 0; t < 5; ++t) {
                ParamVector u = random_cayley_point(hurwitz::minor_param_count(n), rng);
                auto o = cayley::cayley_transform(n, u);
                Rational expect(1);
                for (int k = 0; k < n; ++k) expect *= o.scale_sq;
                if (determinant(o.matrix) != expect)
                    return fail("det != (|u|^2)^n at n=" + std::to_string(n));
            }
        }
        return pass("25 exact determinants");
    });

    run_case(out, "cayley.degenerate.rejected", []() {
        try {
            cayley::cayley_transform(3, ParamVector(4, Rational(0)));
        } catch (const std::domain_error&) {
            return pass("u = 0 rejected");
        }
        return fail("degenerate parameter accepted");
    });

    return out;
}

std::vector<CaseResult> ksmap_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    for (int n : {3, 5, 9}) {
        for (auto side : {ksmap::Side::left, ksmap::Side::right}) {
            std::string base = "ksmap.n" + std::to_string(n) + "." + ksmap::side_name(side);
            run_case(out, base + ".norm_composition", [n, side]() {
                const auto& m = ksmap::map_for(n, side);
                VarList vars = u_vars(m.n_source);
                MultiPoly sum = MultiPoly::zero(vars);
                for (const auto& c : m.components) {
                    if (!c.is_homogeneous(2)) return fail("component not degree-2 homogeneous");
                    sum += c * c;
                }
                MultiPoly r = norm_sq_poly(vars);
                if (sum != r * r) return fail("sum of squares != (|u|^2)^2");
                return pass("exact norm composition");
            });
            run_case(out, base + ".cayley_consistency.random50", [n, side, seed, base]() {
                std::mt19937_64 rng(case_seed(seed, base));
                const auto& m = ksmap::map_for(n, side);
                for (int t = 0; t < 50; ++t) {
                    ParamVector u = random_cayley_point(m.n_source, rng);
                    auto x = ksmap::apply_map(m, u);
                    auto o = cayley::cayley_transform(n, u);
                    for (int i = 0; i < n; ++i) {
                        Rational entry = (side == ksmap::Side::right) ? o.matrix.at(i, n - 1)
                                                                      : o.matrix.at(n - 1, i);
                        if (x[i] != entry) return fail("mismatch at trial " + std::to_string(t));
                    }
                }
                return pass("50 exact agreements");
            });
        }
    }

    run_case(out, "ksmap.homogeneity.random", [seed]() {
        std::mt19937_64 rng(case_seed(seed, "ksmap.homog"));
        for (int n : {3, 5}) {
            const auto& m = ksmap::last_row_map(n);
            for (int t = 0; t < 20; ++t) {
                ParamVector u = random_param_vector(m.n_source, rng);
                Rational lambda = random_rational(rng);
                ParamVector su = u;
                for (auto& c : su) c *= lambda;
                auto x = ksmap::apply_map(m, u);
                auto sx = ksmap::apply_map(m, su);
                for (size_t i = 0; i < x.size(); ++i)
                    if (sx[i] != lambda * lambda * x[i]) return fail("homogeneity violated");
            }
        }
        return pass("x(c u) = c^2 x(u) exact");
    });

    run_case(out, "ksmap.zero_fiber.random", [seed]() {
        std::mt19937_64 rng(case_seed(seed, "ksmap.fiber"));
        for (int n : {3, 5, 9}) {
            const auto& m = ksmap::last_column_map(n);
            for (int t = 0; t < 20; ++t) {
                ParamVector u = random_param_vector(m.n_source, rng);
                auto x = ksmap::apply_map(m, u);
                bool all_zero = true;
                for (const auto& c : x) all_zero = all_zero && c.is_zero();
                if (all_zero) return fail("nonzero u mapped to zero");
            }
        }
        return pass("no collapse on nonzero inputs");
    });

    run_case(out, "ksmap.n5.left.complex_pairing", []() {
        VarList v = u_vars(8);
        const char* expected[5] = {
            "2*u1*u5 + 2*u2*u6 + 2*u3*u7 + 2*u4*u8",
            "2*u1*u6 - 2*u2*u5 + 2*u4*u7 - 2*u3*u8",
            "2*u1*u7 + 2*u2*u8 - 2*u3*u5 - 2*u4*u6",
            "2*u1*u8 - 2*u2*u7 + 2*u3*u6 - 2*u4*u5",
            "u1^2 + u2^2 + u3^2 + u4^2 - u5^2 - u6^2 - u7^2 - u8^2",
        };
        const auto& m = ksmap::last_row_map(5);
        for (int i = 0; i < 5; ++i)
            if (m.components[i] != parse_poly(expected[i], v))
                return fail("component " + std::to_string(i + 1) + " differs");
        return pass("matches the complex-pair expansion");
    });

    for (int n : {2, 3, 5, 9}) {
        run_case(out, "ksmap.jacobian_gram.n" + std::to_string(n), [n]() {
            for (auto side : {ksmap::Side::left, ksmap::Side::right}) {
                const auto& m = laplace::map_for(n, side);
                PolyMatrix g = laplace::jacobian_gram(m);
                VarList vars = u_vars(m.n_source);
                MultiPoly r4 = norm_sq_poly(vars) * Rational(4);
                if (g != scaled_identity(n, r4))
                    return fail("Jacobian Gram != 4 |u|^2 I");
            }
            return pass("rows orthogonal with common square norm 4|u|^2");
        });
    }

    return out;
}

namespace {

MultiPoly random_x_poly(int n, int max_degree, std::mt19937_64& rng) {
    VarList vars = x_vars(n);
    std::uniform_int_distribution<int> nterms(2, 6);
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> pick(0, n - 1);
    MultiPoly p = MultiPoly::zero(vars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Expo e(n, 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
        Rational c = random_rational(rng);
        if (!c.is_zero()) p.add_term(e, c);
    }
    return p;
}

}  // namespace

std::vector<CaseResult> laplace_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    for (int n : {2, 3, 5, 9}) {
        for (auto side : {ksmap::Side::left, ksmap::Side::right}) {
            std::string base =
                "laplace.factorization.n" + std::to_string(n) + "." + ksmap::side_name(side);
            run_case(out, base, [n, side, seed, base]() {
                auto harmonics = laplace::harmonic_monomial_suite(n, 3);
                int count = 0;
                for (const auto& f : harmonics) {
                    auto rep = laplace::verify_factorization(n, side, f);
                    if (!rep.passed)
                        return fail("harmonic #" + std::to_string(count) + " residual " +
                                    rep.residual.to_string());
                    ++count;
                }
                std::mt19937_64 rng(case_seed(seed, base));
                for (int t = 0; t < 20; ++t) {
                    MultiPoly f = random_x_poly(n, 3, rng);
                    auto rep = laplace::verify_factorization(n, side, f);
                    if (!rep.passed) return fail("random polynomial trial " + std::to_string(t));
                    ++count;
                }
                return pass(std::to_string(count) + " polynomials, zero residual each");
            });
        }
    }

    run_case(out, "laplace.harmonic_pullback", []() {
        // harmonic f composes to a harmonic polynomial in the parameters
        for (int n : {3, 5}) {
            auto harmonics = laplace::harmonic_monomial_suite(n, 3);
            const auto& m = ksmap::last_column_map(n);
            for (size_t i = 0; i < harmonics.size(); i += 7) {
                std::vector<MultiPoly> comps(m.components.begin(), m.components.end());
                MultiPoly pulled = harmonics[i].compose(comps);
                if (!laplace::laplacian(pulled).is_zero())
                    return fail("pullback not harmonic at n=" + std::to_string(n));
            }
        }
        return pass("pullbacks of harmonics are harmonic");
    });

    run_case(out, "laplace.negative_control", []() {
        ksmap::QuadraticMap bad = laplace::corrupted_map_n3();
        auto harmonics = laplace::harmonic_monomial_suite(3, 2);
        VarList vars = x_vars(3);
        MultiPoly x1 = MultiPoly::variable_at(vars, 0);
        harmonics.push_back(x1 * x1);  // non-harmonic probe as well
        for (const auto& f : harmonics) {
            auto rep = laplace::verify_factorization_with_map(bad, f);
            if (!rep.passed) return pass("corrupted map detected (residual nonzero)");
        }
        return fail("corrupted map went undetected");
    });

    run_case(out, "laplace.suite_dimensions", []() {
        for (int n : {2, 3, 5, 9}) {
            auto suite = laplace::harmonic_monomial_suite(n, 3);
            int deg1 = n;
            int deg2 = n * (n + 1) / 2 - 1;
            int deg3 = n * (n + 1) * (n + 2) / 6 - n;
            if (static_cast<int>(suite.size()) != deg1 + deg2 + deg3)
                return fail("suite size mismatch at n=" + std::to_string(n));
            for (const auto& f : suite)
                if (!laplace::laplacian(f).is_zero()) return fail("non-harmonic suite element");
        }
        return pass("dimensions match the exact null-space ranks");
    });

    return out;
}

std::vector<CaseResult> param_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    run_case(out, "param.cayley_klein.roundtrip200", [seed]() {
        auto rep = param::verify_cayley_klein_roundtrip(
            200, case_seed(seed, "param.ck"), 1e-10, 1e-12);
        std::string s = "max residual " + fmt(rep.max_residual) + ", norm residual " +
                        fmt(rep.max_norm_residual) + "; " + rep.note;
        return rep.passed ? pass(s) : fail(s);
    });

    run_case(out, "param.r8r5.roundtrip200", [seed]() {
        auto rep =
            param::verify_r8_roundtrip(200, case_seed(seed, "param.r8"), 1e-10, 1e-12);
        std::string s = "max residual " + fmt(rep.max_residual) + ", norm residual " +
                        fmt(rep.max_norm_residual) + "; " + rep.note;
        return rep.passed ? pass(s) : fail(s);
    });

    run_case(out, "param.unitary_product.left_identity", [seed]() {
        double worst = param::max_eq_left_product_residual(100, case_seed(seed, "param.eq26"));
        return worst < 1e-12 ? pass("max residual " + fmt(worst))
                             : fail("max residual " + fmt(worst));
    });

    run_case(out, "param.hyperspherical.norms", [seed]() {
        double worst = 0.0;
        for (int n : {3, 5, 9})
            worst = std::max(worst, param::max_hyperspherical_norm_residual(
                                        n, 50, case_seed(seed, "param.hs")));
        return worst < 1e-12 ? pass("max norm residual " + fmt(worst))
                             : fail("max norm residual " + fmt(worst));
    });

    return out;
}

std::vector<CaseResult> cartanweyl_suite(uint64_t seed) {
    std::vector<CaseResult> out;
    (void)seed;

    run_case(out, "cartanweyl.printed_brackets", []() {
        auto g = cartanweyl::decompose_adjoint(cartanweyl::canonical_h8_poly());
        for (const auto& d : g.diag)
            if (d != Rational(1)) return fail("u1 bracket is not the identity");
        for (int k = 2; k <= 8; ++k) {
            const auto& slots = cartanweyl::canonical_slots(k);
            ExactMatrix m = cartanweyl::printed_sign_matrix(k <= 4 ? 1 : 2);
            int row = (k - 1) % 4;
            ExactMatrix expect(8, 8, Rational(0));
            for (int s = 0; s < 4; ++s) {
                expect.at(slots[s].first - 1, slots[s].second - 1) = m.at(row, s);
                expect.at(slots[s].second - 1, slots[s].first - 1) = -m.at(row, s);
            }
            if (g.skew_coefficient(k) != expect)
                return fail("bracket of u_" + std::to_string(k) + " differs from print");
        }
        if (cartanweyl::generating_matrices(8)[0].to_poly() != cartanweyl::canonical_h8_poly())
            return fail("first generating matrix is not the canonical matrix");
        return pass("all eight printed brackets reproduced");
    });

    run_case(out, "cartanweyl.sign_matrices.orthogonal", []() {
        for (int which : {1, 2}) {
            ExactMatrix m = cartanweyl::printed_sign_matrix(which);
            if (m * m.transpose() != ExactMatrix::identity(4, Rational(0)).scale(Rational(4)))
                return fail("sign matrix " + std::to_string(which) + " not orthogonal");
        }
        return pass("M M^t = 4 I for both");
    });

    for (int n : {4, 8, 16}) {
        run_case(out, "cartanweyl.span.n" + std::to_string(n), [n]() {
            const auto& mats = cartanweyl::generating_matrices(n);  // throws on deficiency
            if (static_cast<int>(mats.size()) != n / 2)
                return fail("expected n/2 generating matrices");
            auto set = cartanweyl::generators_from_generating_matrices(n);
            SpanTracker tracker(n * n);
            for (const auto& m : set.generators) {
                if (!m.is_antisymmetric()) return fail("non-antisymmetric generator");
                tracker.insert(flatten(m));
            }
            int expect = n * (n - 1) / 2;
            if (tracker.rank() != expect)
                return fail("rank " + std::to_string(tracker.rank()));
            return pass("rank " + std::to_string(expect) + " from " +
                        std::to_string(set.generators.size()) + " generators");
        });
        run_case(out, "cartanweyl.closure.n" + std::to_string(n), [n]() {
            auto set = cartanweyl::generators_from_generating_matrices(n);
            int rank = cartanweyl::lie_closure_rank(set);
            int expect = n * (n - 1) / 2;
            if (rank != expect) return fail("closure rank " + std::to_string(rank));
            return pass("closure rank " + std::to_string(rank));
        });
    }

    run_case(out, "cartanweyl.so5.printed5x5", []() {
        VarList vars = u_vars(8);
        PolyMatrix h(5, 5, MultiPoly::zero(vars));
        std::vector<ExactMatrix> coeffs = {
            ExactMatrix::identity(5, Rational(0)), cartanweyl::hat_S(3, 5),
            cartanweyl::hat_S(2, 5),               cartanweyl::hat_S(1, 5),
            cartanweyl::sigma_matrix(5, 1, 5),     cartanweyl::sigma_matrix(5, 2, 5),
            cartanweyl::sigma_matrix(5, 3, 5),     cartanweyl::sigma_matrix(5, 4, 5)};
        for (int k = 0; k < 8; ++k) {
            MultiPoly uk = MultiPoly::variable_at(vars, k);
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (!coeffs[k].at(i, j).is_zero()) h.at(i, j) += uk * coeffs[k].at(i, j);
        }
        PolyMatrix printed =
            hurwitz::pattern_to_poly(hurwitz::principal_minor_pattern(5), 8);
        if (h != printed) return fail("hatted reconstruction differs from the printed matrix");
        return pass("exact reconstruction");
    });

    run_case(out, "cartanweyl.so5.commuting_spins", []() {
        auto g = cartanweyl::so5_generators();
        for (int a = 0; a < 3; ++a)
            for (int b = 3; b < 6; ++b) {
                ExactMatrix comm =
                    g.generators[a] * g.generators[b] - g.generators[b] * g.generators[a];
                if (!comm.is_zero())
                    return fail("[" + g.labels[a] + ", " + g.labels[b] + "] != 0");
            }
        return pass("all nine spin pairs commute");
    });

    run_case(out, "cartanweyl.so5.table_closed", []() {
        auto g = cartanweyl::so5_generators();
        auto table = cartanweyl::commutator_table(g);
        if (!table.closed) return fail("commutator left the span");
        // spot structure constant: [S_1, S_2] = -2 S_3 from the matrix oracle
        ExactMatrix c = g.generators[0] * g.generators[1] - g.generators[1] * g.generators[0];
        if (c != g.generators[2].scale(Rational(-2))) return fail("[S1,S2] != -2 S3");
        return pass("closed table; [S1,S2] = -2 S3");
    });

    run_case(out, "cartanweyl.so5.ladders", []() {
        // complexified combinations; proportionality under bracketing with S_3
        auto g = cartanweyl::so5_generators();
        auto lift = [](const ExactMatrix& m) {
            GaussMatrix z(m.rows(), m.cols(), GaussianRational(0));
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) z.at(i, j) = GaussianRational(m.at(i, j));
            return z;
        };
        GaussianRational iu = GaussianRational::i();
        GaussMatrix s3 = lift(g.generators[2]);
        auto scaled = [&](const GaussMatrix& m, GaussianRational c) {
            GaussMatrix r = m;
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
            return r;
        };
        GaussMatrix u1 = lift(g.generators[6]), u2 = lift(g.generators[7]);
        GaussMatrix v1 = lift(g.generators[8]), v2 = lift(g.generators[9]);
        auto bracket = [](const GaussMatrix& a, const GaussMatrix& b) {
            return a * b - b * a;
        };
        for (int s : {+1, -1}) {
            GaussianRational si = s > 0 ? iu : -iu;
            GaussMatrix uplus = u1 + scaled(u2, si);
            GaussMatrix vplus = v1 + scaled(v2, si);
            if (!(bracket(s3, uplus) == scaled(uplus, si)))
                return fail("U ladder relation fails");
            if (!(bracket(s3, vplus) == scaled(vplus, si)))
                return fail("V ladder relation fails");
            // the misprinted reading (second-axis + fourth-axis combination)
            // must not be a bracket eigenvector
            GaussMatrix vmis = u2 + scaled(v2, si);
            GaussMatrix b = bracket(s3, vmis);
            bool eigen = (b == scaled(vmis, si)) || (b == scaled(vmis, -si));
            if (eigen) return fail("misprinted combination unexpectedly is an eigenvector");
        }
        return pass("ladder relations hold for the consistent reading only");
    });

    run_case(out, "cartanweyl.appendix_rule", []() {
        int corrected = cartanweyl::corrected_rule_mismatch_count(5);
        int printed = cartanweyl::printed_rule_mismatch_count(5);
        if (corrected != 0)
            return fail("corrected rule mismatches: " + std::to_string(corrected));
        if (printed == 0) return fail("printed rule unexpectedly matches everywhere");
        return pass("corrected rule exact; printed rule fails at " + std::to_string(printed) +
                    " index tuples");
    });

    run_case(out, "cartanweyl.closure.examples", []() {
        // single rotation plane stays abelian; two planes generate so(3)
        cartanweyl::GeneratorSet one{3, {"a"}, {cartanweyl::sigma_matrix(3, 1, 2)}};
        if (cartanweyl::lie_closure_rank(one) != 1) return fail("abelian case");
        cartanweyl::GeneratorSet two{
            3, {"a", "b"},
            {cartanweyl::sigma_matrix(3, 1, 2), cartanweyl::sigma_matrix(3, 2, 3)}};
        if (cartanweyl::lie_closure_rank(two) != 3) return fail("so(3) case");
        auto table = cartanweyl::commutator_table(two);
        if (table.closed) return fail("truncated pair should not close");
        return pass("closure ranks 1 and 3; truncated pair reports a residual");
    });

    return out;
}

std::vector<CaseResult> bispherical_suite(uint64_t seed) {
    std::vector<CaseResult> out;

    run_case(out, "bispherical.unitarity", [seed]() {
        double worst =
            bispherical::max_unitarity_residual(2, 25, case_seed(seed, "bis.unit"));
        return worst < 1e-12 ? pass("max residual " + fmt(worst))
                             : fail("max residual " + fmt(worst));
    });

    run_case(out, "bispherical.cg_orthogonality", []() {
        double worst = bispherical::max_cg_orthogonality_residual(2);
        return worst < 1e-12 ? pass("max residual " + fmt(worst))
                             : fail("max residual " + fmt(worst));
    });

    run_case(out, "bispherical.product.all_pairs", [seed]() {
        double worst = 0.0;
        for (int l1 = 0; l1 <= 2; ++l1)
            for (int l2 = 0; l2 <= 2; ++l2) {
                auto rep = bispherical::verify_bispherical_product(
                    l1, l2, 25, case_seed(seed, "bis.prod" + std::to_string(l1 * 3 + l2)));
                worst = std::max(worst, rep.max_residual);
            }
        return worst < 1e-10 ? pass("max residual " + fmt(worst))
                             : fail("max residual " + fmt(worst));
    });

    return out;
}

Report run_all(uint64_t seed) {
    Report rep;
    rep.suite = "verify-all";
    rep.version = kVersion;
    rep.seed = seed;

    for (auto* suite : {&hurwitz_suite, &cayley_suite, &ksmap_suite, &laplace_suite,
                        &param_suite, &cartanweyl_suite, &bispherical_suite}) {
        auto cases = (*suite)(seed);
        rep.cases.insert(rep.cases.end(), std::make_move_iterator(cases.begin()),
                         std::make_move_iterator(cases.end()));
    }
    std::sort(rep.cases.begin(), rep.cases.end(),
              [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
    return rep;
}

}  // namespace hcw::verify
