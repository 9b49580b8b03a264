#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "desing/coefficients.hpp"
#include "desing/errors.hpp"
#include "desing/ez2.hpp"
#include "desing/json_io.hpp"
#include "desing/padic.hpp"

namespace desing::cli {

namespace {

struct Suite {
  std::vector<CheckLine> lines;

  // Runs f; any exception is a failed check with the message as detail.
  template <class F>
  void check(const std::string& name, F&& f) {
    CheckLine l{name, false, ""};
    try {
      l.ok = f(l.detail);
    } catch (const std::exception& e) {
      l.detail = std::string("threw: ") + e.what();
    }
    lines.push_back(std::move(l));
  }

  template <class F>
  void expect_throw(const std::string& name, F&& f) {
    check(name, [&](std::string& detail) {
      try {
        f();
      } catch (const PoleError&) {
        return true;
      }
      detail = "no pole error";
      return false;
    });
  }
};

std::string show(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

bool near(Complex a, Complex b, double tol, std::string& detail) {
  double e = std::abs(a - b);
  detail = "|diff| = " + show(e);
  return e < tol;
}

double zeta(double s) { return riemann_zeta(s).value.real(); }

SPoly var(int d, int j, long a = 0) { return SPoly::variable(d, j - 1, a); }
SPoly cst(int d, long a) { return SPoly::constant(d, a); }

ExpandedIdentity swap12(const ExpandedIdentity& e) {
  ExpandedIdentity out;
  for (const auto& [m, p] : e) {
    SPoly q(3);
    for (const auto& [ex, c] : p.terms()) {
      SPoly t = SPoly::constant(3, c);
      std::vector<int> sw{ex[1], ex[0], ex[2]};
      for (int j = 0; j < 3; ++j)
        for (int r = 0; r < sw[j]; ++r) t = t * SPoly::variable(3, j);
      q += t;
    }
    out[{m[1], m[0], m[2]}] = q;
  }
  return out;
}

std::string run_cli(std::vector<const char*> args, int& code) {
  args.insert(args.begin(), "desing");
  std::ostringstream out, err;
  code = run(static_cast<int>(args.size()), args.data(), out, err);
  return out.str();
}

}  // namespace

std::vector<CheckLine> published_value_checks() {
  Suite s;
  const CyclotomicNumber minus_one(-1);

  s.check("phi(-2, -1) = 0", [&](std::string&) { return lerch_neg_coeff(2, minus_one).is_zero(); });
  s.check("phi(-2k, +-1) = 0 for k <= 10", [&](std::string&) {
    for (int k = 2; k <= 20; k += 2)
      if (!lerch_neg_coeff(k, minus_one).is_zero() || zeta_nonpositive(k) != 0) return false;
    return true;
  });
  s.check("H_2(-1) = 0", [&](std::string&) { return frobenius_euler(2, minus_one).is_zero(); });
  s.check("F coefficient n=0, xi=1 is B_1 = -1/2", [&](std::string&) {
    return f_delta_coeff(0, CyclotomicNumber(1)) == CyclotomicNumber(Rational(-1, 2));
  });

  s.check("triple Euler-Zagier gamma matrix", [&](std::string&) {
    HLData h = ezl_data({Twist(), Twist(), Twist()}, {1, 1, 1});
    ScalarMatrix g{{1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
    return h.gamma == g;
  });
  Mt2Family mt = mt2_data();
  s.check("MT2 c-matrix a=b=0", [&](std::string&) { return mt.c(0, 0).c == ScalarMatrix{{1, 0, 0}, {0, 1, 0}}; });
  s.check("MT2 c-matrix a=1, b=0", [&](std::string&) { return mt.c(1, 0).c == ScalarMatrix{{2, 1, -1}, {0, 1, 0}}; });
  s.check("A2 root system data equals MT2", [&](std::string&) {
    return root_system_rank2_data({{1, 0}, {0, 1}, {1, 1}}, {Twist(), Twist()}).first == mt.data;
  });
  s.check("solved MT2 c lies in the (a, b) family", [&](std::string& detail) {
    CMatrix c = solve_c_matrix(mt.data);
    Rational a = c.c[0][1].exact(), b = c.c[1][0].exact();
    detail = "a = " + desing::to_string(a) + ", b = " + desing::to_string(b);
    return c == mt.c(a, b);
  });

  s.check("singularities xi=(1,1)", [&](std::string&) {
    auto cat = singular_hyperplanes({Twist(), Twist()}, 3);
    return cat.hyperplanes.size() == 2 && cat.hyperplanes[0].constants == std::vector<long>{2, 1, 0, -2, -4, -6} &&
           cat.hyperplanes[1].first == 2 && cat.hyperplanes[1].constants == std::vector<long>{1};
  });
  s.check("singularities xi=(i,i) empty", [&](std::string&) {
    return singular_hyperplanes({Twist::root(4, 1), Twist::root(4, 1)}, 5).empty();
  });
  s.check("singularities xi=(1,-1)", [&](std::string&) {
    auto cat = singular_hyperplanes({Twist(), Twist::root(2, 1)}, 2);
    return cat.hyperplanes.size() == 1 && cat.hyperplanes[0].first == 1 && cat.hyperplanes[0].last == 2 &&
           cat.hyperplanes[0].constants == std::vector<long>{1, 0, -2, -4};
  });

  s.check("MT2 generating function, a=b=0 part", [&](std::string&) {
    const int d = 3;
    auto mono = [&](long c, std::vector<int> l, std::vector<int> m) {
      return LaurentSeriesPoly::monomial(d, Rational(c), std::move(l), std::move(m));
    };
    LaurentSeriesPoly one = LaurentSeriesPoly::constant(d, 1);
    // (u1 - 1)(u2 - 1) + u3 (u1 - 1) v2^-1 v3 + ...
    LaurentSeriesPoly f1 = one - mono(1, {1, 0, 0}, {0, 0, 0}) - mono(1, {0, 0, 1}, {-1, 0, 1});
    LaurentSeriesPoly f2 = one - mono(1, {0, 1, 0}, {0, 0, 0}) - mono(1, {0, 0, 1}, {0, -1, 1});
    LaurentSeriesPoly g = generating_function(mt.data, mt.c(0, 0));
    return g == f1 * f2 && g.coeff({1, 0, 1}, {0, -1, 1}) == 1 && g.coeff({0, 0, 1}, {0, -1, 1}) == -1;
  });
  s.check("EZ r=2 three-term identity", [&](std::string&) {
    ExpandedIdentity expected{
        {{0, 0}, (var(2, 1, -1)) * (var(2, 2, -1))},
        {{-1, 1}, var(2, 2) * (var(2, 2, 1) - var(2, 1))},
        {{-2, 2}, cst(2, -1) * var(2, 2) * var(2, 2, 1)},
    };
    return desing_identity(ez_data(2)).expanded() == expected;
  });
  s.check("MT2 four-term identity (a=b=0)", [&](std::string&) {
    ExpandedIdentity expected{
        {{0, 0, 0}, var(3, 1, -1) * var(3, 2, -1)},
        {{0, -1, 1}, var(3, 3) * var(3, 1, -1)},
        {{-1, 0, 1}, var(3, 3) * var(3, 2, -1)},
        {{-1, -1, 2}, var(3, 3) * var(3, 3, 1)},
    };
    return desing_identity(mt.data, mt.c(0, 0)).expanded() == expected;
  });

  HLData ez = ez_data(2);
  for (auto [l1, l2, num, den] : std::vector<std::array<long, 4>>{{0, 0, 1, 4}, {1, 1, 1, 36}, {0, 2, 1, 18}}) {
    std::string name = "zeta2^des(" + std::to_string(-l1) + "," + std::to_string(-l2) + ") = " + std::to_string(num) +
                       "/" + std::to_string(den);
    s.check(name + " (generating function)", [&](std::string& detail) {
      CyclotomicNumber v = special_value_nonpos(ez, {int(l1), int(l2)});
      detail = v.to_string();
      return v == CyclotomicNumber(Rational(num, den));
    });
  }

  auto rel = trivial_relation_terms(mt.data);
  s.check("trivial relation: coefficient of a has 8 terms", [&](std::string&) {
    auto s1 = var(3, 1), s2 = var(3, 2), s3 = var(3, 3);
    auto one = cst(3, 1), two = cst(3, 2);
    ExpandedIdentity relation_a{
        {{0, 0, 0}, (s2 - one) * (s1 - s3)},
        {{0, -1, 1}, cst(3, -1) * s3 * (two - s1 - s2 + s3)},
        {{0, -2, 2}, s3 * (s3 + one)},
        {{1, -1, 0}, s1 * (s2 - s3 - one)},
        {{1, 0, -1}, cst(3, -1) * s1 * (s2 - one)},
        {{1, -2, 1}, s1 * s3},
        {{-1, 0, 1}, (s2 - one) * s3},
        {{-1, -1, 2}, s3 * (s3 + one)},
    };
    return rel.size() == 3 && rel[0].expanded() == relation_a;
  });
  s.check("trivial relation: coefficient of b is the swap of a", [&](std::string&) {
    return rel.size() == 3 && rel[1].expanded() == swap12(rel[0].expanded());
  });
  s.check("trivial relation: coefficient of ab has 13 terms", [&](std::string&) {
    return rel.size() == 3 && rel[2].expanded().size() == 13;
  });

  s.check("phi(s, 1) = zeta(s)", [&](std::string& detail) {
    Complex z(0.3, 2.0);
    return near(lerch_phi(z, Twist()).value, riemann_zeta(z).value, 1e-12, detail);
  });
  s.check("zeta2(2.5, 0) = -zeta(1.5) - zeta(2.5)/2", [&](std::string& detail) {
    return near(hl_zeta(ez, {2.5, 0}).value, -zeta(1.5) - 0.5 * zeta(2.5), 1e-10, detail);
  });
  s.expect_throw("zeta2(2, 1) is a pole", [&] { hl_zeta(ez, {2, 1}); });
  s.check("zeta2(s, 0) form", [&](std::string& detail) {
    Complex z(2.3, 0.4);
    return near(ez2_neg_args(NegArg::second, z, 0).value, -riemann_zeta(z - 1.0).value - 0.5 * riemann_zeta(z).value, 1e-12,
                detail);
  });
  s.check("zeta2(0, s) form", [&](std::string& detail) {
    Complex z(2.3, 0.4);
    return near(ez2_neg_args(NegArg::first, z, 0).value, riemann_zeta(z - 1.0).value - riemann_zeta(z).value, 1e-12, detail);
  });
  s.check("zeta2(-1, s) form", [&](std::string& detail) {
    Complex z(3.3, 0.4);
    return near(ez2_neg_args(NegArg::first, z, 1).value,
                0.5 * (riemann_zeta(z - 2.0).value - riemann_zeta(z - 1.0).value), 1e-12, detail);
  });

  s.check("zeta2^des(1,1) = 1/2", [&](std::string&) {
    return ez2_des_exact(1, 1) == ZetaValue{Rational(1, 2), {}} && ez2_des(1, 1).value == Complex(0.5, 0);
  });
  s.check("zeta2^des(2,1) = 2 zeta(3) - zeta(2)", [&](std::string& detail) {
    bool exact = ez2_des_exact(2, 1) == ZetaValue{0, {{2, -1}, {3, 2}}};
    return near(ez2_des(2, 1).value, 2 * zeta(3) - zeta(2), 1e-9, detail) && exact;
  });
  s.check("zeta2^des(3,1) = 2 zeta(3) - 5/4 zeta(4)", [&](std::string& detail) {
    return near(ez2_des(3, 1).value, 2 * zeta(3) - 1.25 * zeta(4), 1e-9, detail);
  });
  s.check("zeta2^des(4,1) = 3 zeta(4) + 2 zeta(5) - 2 zeta(2) zeta(3)", [&](std::string& detail) {
    return near(ez2_des(4, 1).value, 3 * zeta(4) + 2 * zeta(5) - 2 * zeta(2) * zeta(3), 1e-9, detail);
  });
  for (auto [a, b, num, den] : std::vector<std::array<long, 4>>{
           {0, 0, 1, 4}, {-1, -1, 1, 36}, {0, -2, 1, 18}, {1, -3, 1, 20}, {-1, 1, 1, 8}}) {
    s.check("zeta2^des(" + std::to_string(a) + "," + std::to_string(b) + ") = " + std::to_string(num) + "/" +
                std::to_string(den),
            [&](std::string&) { return ez2_des_exact(a, b) == ZetaValue{Rational(num, den), {}}; });
  }
  s.check("zeta2^des(2,-3), (3,-3), (4,-3)", [&](std::string&) {
    return ez2_des_exact(2, -3) == ZetaValue{Rational(1, 3), {{2, Rational(-1, 30)}}} &&
           ez2_des_exact(3, -3) == ZetaValue{Rational(3, 4), {{3, Rational(-1, 15)}}} &&
           ez2_des_exact(4, -3) == ZetaValue{Rational(1, 2), {{2, Rational(1, 2)}, {4, Rational(-1, 10)}}};
  });
  s.check("zeta2^des(-1,2), (-1,3)", [&](std::string&) {
    return ez2_des_exact(-1, 2) == ZetaValue{Rational(5, 12), {{2, Rational(-1, 6)}}} &&
           ez2_des_exact(-1, 3) == ZetaValue{Rational(-1, 12), {{2, Rational(1, 2)}, {3, Rational(-1, 2)}}};
  });
  s.check("zeta2^des(s,-3) closed form", [&](std::string&) {
    ZetaLine e = ZetaLine::term(-3, Poly1(std::vector<Rational>{-2, Rational(1, 2)})) +
                 ZetaLine::term(-2, Poly1(std::vector<Rational>{Rational(-3, 2), Rational(1, 2)})) +
                 ZetaLine::term(0, Poly1(std::vector<Rational>{Rational(1, 30), Rational(-1, 30)}));
    return ez2_des_neg_line(3) == e;
  });
  s.check("zeta2^des(-1,s) closed form", [&](std::string&) {
    ZetaLine e = ZetaLine::term(-2, Poly1(std::vector<Rational>{1, Rational(-7, 12), Rational(1, 12)})) +
                 ZetaLine::term(-1, Poly1(std::vector<Rational>{-1, Rational(1, 2)})) +
                 ZetaLine::term(0, Poly1(std::vector<Rational>{0, Rational(1, 12), Rational(-1, 12)}));
    return ez2_des_neg_line(1, NegArg::first) == e;
  });

  for (auto pt : std::vector<std::vector<Complex>>{{5, 5, 5}, {4, 6, 5}}) {
    s.check("trivial relations at (" + std::to_string(int(pt[0].real())) + "," + std::to_string(int(pt[1].real())) + "," +
                std::to_string(int(pt[2].real())) + ")",
            [&](std::string& detail) {
              TrivialResiduals r = verify_trivial_relations(pt);
              double worst = std::max({r.relation_a, r.relation_b, r.relation_ab});
              detail = "max residual " + show(worst);
              return worst < 1e-8;
            });
  }

  s.check("sum over c-th roots of twisted Bernoulli numbers", [&](std::string&) {
    for (int c : {2, 3, 4, 5})
      for (int n = 1; n <= 6; ++n) {
        CyclotomicNumber acc(0);
        for (int a = 1; a < c; ++a) acc += twisted_multi_bernoulli({{n}, {CyclotomicNumber::root_of_unity(c, a)}});
        Integer cn = 1;
        for (int k = 0; k <= n; ++k) cn *= c;
        if (acc != CyclotomicNumber(Rational(Integer(1) - cn) * bernoulli(n + 1) / Rational(n + 1))) return false;
      }
    return true;
  });
  s.check("L_{p,1}(0) = 0", [&](std::string&) {
    for (auto [c, p] : std::vector<std::pair<long, long>>{{2, 3}, {3, 5}, {4, 7}})
      if (padic_L_nonpos({{0}, c, p}) != 0) return false;
    return true;
  });

  s.check("cli: special --data ez2 --lambda 1,1", [&](std::string& detail) {
    int code = 0;
    Json j = Json::parse(run_cli({"special", "--data", "ez2", "--lambda", "1,1"}, code));
    detail = j.dump();
    return code == 0 && j == Json{{"num", 1}, {"den", 36}};
  });
  s.check("cli: eval --data ez2 --des --at 1,1", [&](std::string& detail) {
    int code = 0;
    Json j = Json::parse(run_cli({"eval", "--data", "ez2", "--des", "--at", "1,1"}, code));
    detail = j["value"].dump();
    return code == 0 && j["value"]["re"].get<double>() == 0.5 && j["value"]["im"].get<double>() == 0.0;
  });
  return s.lines;
}

std::vector<CheckLine> trivial_relation_checks(const EvalConfig& cfg) {
  Suite s;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> re(4.0, 6.0), im(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    std::vector<Complex> pt{{re(rng), im(rng)}, {re(rng), im(rng)}, {re(rng), im(rng)}};
    std::ostringstream name;
    name.precision(3);
    name << "MT2 point (" << pt[0] << ", " << pt[1] << ", " << pt[2] << ")";
    s.check(name.str(), [&](std::string& detail) {
      TrivialResiduals r = verify_trivial_relations(pt, cfg);
      double worst = std::max({r.relation_a, r.relation_b, r.relation_ab});
      detail = "max residual " + show(worst);
      return worst < 1e-8;
    });
  }
  return s.lines;
}

std::vector<CheckLine> oracle_checks(const EvalConfig& cfg) {
  Suite s;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> sigma(2.0, 5.0), t(-1.0, 1.0);
  HLData ez = ez_data(2);
  s.check("Mellin-Barnes vs direct sum at 50 EZ points", [&](std::string& detail) {
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      Complex s1(sigma(rng), t(rng)), s2(sigma(rng), t(rng));
      Complex mb = ezl2_continued(Twist(), Twist(), 1, 1, s1, s2, cfg).value;
      Complex direct = hl_zeta_direct(ez, {s1, s2}, cfg).value;
      worst = std::max(worst, std::abs(mb - direct));
    }
    detail = "max |diff| = " + show(worst);
    return worst < 1e-9;
  });
  std::uniform_real_distribution<double> anywhere(-2.5, 3.5);
  DesingIdentity id = desing_identity(ez);
  s.check("identity vs dispatching evaluator at 20 points", [&](std::string& detail) {
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      Complex s1(anywhere(rng), t(rng)), s2(anywhere(rng), t(rng));
      Complex a = evaluate_identity(id, {s1, s2}, cfg).value;
      Complex b = ez2_des(s1, s2, cfg).value;
      worst = std::max(worst, std::abs(a - b));
    }
    detail = "max |diff| = " + show(worst);
    return worst < 1e-9;
  });
  return s.lines;
}

}  // namespace desing::cli
