#include "ymheat/verify.hpp"

#include "ymheat/oracle.hpp"
#include "ymheat/partitions.hpp"
#include "ymheat/weights.hpp"
#include "ymheat/yangmills.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <sstream>

namespace ymheat {

namespace {

class Check {
 public:
  Check(std::string suite, std::string name) {
    result_.suite = std::move(suite);
    result_.name = std::move(name);
  }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  CheckResult done() const { return result_; }

 private:
  CheckResult result_;
};

std::vector<Partition> partitions_upto(int k) {
  std::vector<Partition> out;
  for (int s = 0; s <= k; ++s) {
    for (Partition& p : enumerate(s)) out.push_back(std::move(p));
  }
  return out;
}

template <typename Fn>
void for_pairs(int max_size, int rank, Fn&& fn) {
  const auto ps = partitions_upto(max_size);
  for (const Partition& a : ps) {
    for (const Partition& b : ps) {
      if (a.length() + b.length() <= rank) fn(a, b);
    }
  }
}

std::string show(const CompositeWeight& w) { return w.to_string(); }

bool close(double x, double y, double rel) {
  return std::fabs(x - y) <= rel * std::max({std::fabs(x), std::fabs(y), 1e-300});
}

std::string describe_values(double got, double want) {
  std::ostringstream os;
  os.precision(17);
  os << "got " << got << ", expected " << want;
  return os.str();
}

const long kPlateaus[] = {-2, 0, 3};

}  // namespace

std::vector<CheckResult> verify_partitions() {
  std::vector<CheckResult> out;
  const std::string suite = "partitions";
  {
    Check c(suite, "branching duality");
    for (const Partition& a : partitions_upto(10)) {
      if (a.size() < 10) {
        for (const Partition& b : add_box(a)) {
          const auto back = remove_box(b);
          c.expect(std::find(back.begin(), back.end(), a) != back.end(),
                   [&] { return a.to_string() + " -> " + b.to_string(); });
        }
      }
      for (const Partition& b : remove_box(a)) {
        const auto up = add_box(b);
        c.expect(std::find(up.begin(), up.end(), a) != up.end(),
                 [&] { return b.to_string() + " -> " + a.to_string(); });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "standard tableaux recursion");
    for (const Partition& a : partitions_upto(12)) {
      if (a.empty()) continue;
      BigInt sum = 0;
      for (const Partition& b : remove_box(a)) sum += sym_dim(b);
      c.expect(sum == sym_dim(a), [&] { return a.to_string(); });
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "content bound");
    for (const Partition& a : partitions_upto(20)) {
      const long k = total_content(a);
      const long s = a.size();
      c.expect(2 * std::labs(k) <= s * (s - 1), [&] { return a.to_string(); });
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "content identity");
    for (const Partition& a : partitions_upto(12)) {
      long rhs = 0;
      for (int i = 0; i < a.length(); ++i) {
        rhs += static_cast<long>(a[i]) * a[i];
        for (int j = i + 1; j < a.length(); ++j) rhs += a[i] - a[j];
      }
      rhs -= static_cast<long>(a.length()) * a.size();
      c.expect(2 * total_content(a) == rhs, [&] { return a.to_string(); });
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "partition count");
    for (int k = 0; k <= 40; ++k) {
      const auto n = enumerate(k).size();
      c.expect(n == partition_count(k), [&] { return "k = " + std::to_string(k); });
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "single-box strips");
    for (const Partition& a : partitions_upto(10)) {
      const auto strips = border_strips(a, 1);
      const auto boxes = add_box(a);
      bool ok = strips.size() == boxes.size();
      for (std::size_t i = 0; ok && i < strips.size(); ++i) {
        ok = strips[i].target == boxes[i] && strips[i].height == 0;
      }
      c.expect(ok, [&] { return a.to_string(); });
    }
    out.push_back(c.done());
  }
  return out;
}

namespace {

std::set<ExplicitWeight> tuple_set(const std::vector<CompositeWeight>& ws) {
  std::set<ExplicitWeight> out;
  for (const auto& w : ws) out.insert(compose(w));
  return out;
}

std::vector<std::complex<double>> unit_circle_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<std::complex<double>> x;
  while (static_cast<int>(x.size()) < n) {
    const auto z = std::polar(1.0, angle(rng));
    bool distinct = true;
    for (const auto& y : x) distinct = distinct && std::abs(y - z) > 1e-3;
    if (distinct) x.push_back(z);
  }
  return x;
}

ExplicitWeight padded(const Partition& a, int rank) {
  std::vector<long> parts(static_cast<std::size_t>(rank), 0);
  for (int i = 0; i < a.length(); ++i) parts[static_cast<std::size_t>(i)] = a[i];
  return ExplicitWeight(std::move(parts));
}

}  // namespace

std::vector<CheckResult> verify_identities() {
  std::vector<CheckResult> out;
  const std::string suite = "identities";
  {
    Check c(suite, "compose/decompose round trip");
    for (int N = 1; N <= 10; ++N) {
      for_pairs(4, N, [&](const Partition& a, const Partition& b) {
        if (!canonical_pair(a, b, N)) return;
        for (long n : kPlateaus) {
          const CompositeWeight w(a, b, n, N);
          c.expect(decompose(compose(w)) == w, [&] { return show(w); });
        }
      });
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "dimension factorisation");
    Check lc(suite, "log dimension accuracy");
    Check cu(suite, "unitary Casimir closed form");
    Check cs(suite, "special unitary Casimir closed form");
    Check sh(suite, "shift law");
    for (int N = 1; N <= 12; ++N) {
      for_pairs(4, N, [&](const Partition& a, const Partition& b) {
        for (long n : kPlateaus) {
          const CompositeWeight w(a, b, n, N);
          const ExplicitWeight e = compose(w);
          c.expect(dim(w) == dim_explicit(e), [&] { return show(w); });
          cu.expect(casimir_u(w) == casimir_u_explicit(e), [&] { return show(w); });
        }
        const CompositeWeight su = su_weight(a, b, N);
        const ExplicitWeight mu = compose(su);
        const Rational csu = casimir_su(a, b, N);
        const bool normal = mu.su_normalized() || !canonical_pair(a, b, N);
        cs.expect(normal && csu == casimir_su_explicit(su_normalize(mu)),
                  [&] { return show(su); });
        for (long n = -3; n <= 3; ++n) {
          const Rational x = Rational(n) + Rational(mu.total(), N);
          sh.expect(casimir_u_explicit(shift(mu, n)) == csu + x * x, [&] { return show(su); });
          sh.expect(shift(mu, n - b[0]) == compose(a, b, n, N), [&] { return show(su); });
        }
      });
    }
    for (int N = 1; N <= 30; ++N) {
      for_pairs(5, N, [&](const Partition& a, const Partition& b) {
        const CompositeWeight w(a, b, 0, N);
        const double exact = log_big(dim(w));
        const double approx = log_dim(w);
        lc.expect(std::fabs(exact - approx) <= 1e-12 * std::max(1.0, std::fabs(exact)),
                  [&] { return show(w) + ": " + describe_values(approx, exact); });
      });
    }
    out.push_back(c.done());
    out.push_back(lc.done());
    out.push_back(cu.done());
    out.push_back(cs.done());
    out.push_back(sh.done());
  }
  {
    Check c(suite, "hook-content formula");
    for (int N = 1; N <= 8; ++N) {
      for (const Partition& a : partitions_upto(8)) {
        if (a.length() > N) continue;
        c.expect(Rational(dim_explicit(padded(a, N))) == content_dim(a, N),
                 [&] { return a.to_string() + " N=" + std::to_string(N); });
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "q factor for one box each");
    for (int N = 2; N <= 40; ++N) {
      c.expect(q_factor(Partition{1}, Partition{1}, N) == Rational(N * N - 1, N * N),
               [&] { return "N=" + std::to_string(N); });
    }
    out.push_back(c.done());
  }
  {
    Check ca(suite, "Casimir difference on adding to alpha");
    Check cb(suite, "Casimir difference on removing from beta");
    for (int N = 1; N <= 10; ++N) {
      for_pairs(4, N, [&](const Partition& a, const Partition& b) {
        for (long n : kPlateaus) {
          const CompositeWeight w(a, b, n, N);
          const Rational cw = casimir_u(w);
          for (int i = 0; i <= a.length(); ++i) {
            if (i > 0 && a[i - 1] == a[i]) continue;
            if (i == a.length() && a.length() + 1 + b.length() > N) continue;
            const auto up = add_box(a);
            const Partition& a2 = *std::find_if(up.begin(), up.end(), [&](const Partition& p) {
              return p[i] == a[i] + 1;
            });
            const CompositeWeight w2(a2, b, n, N);
            const long i0 = i + 1;
            const Rational want = Rational(-1) - Rational(2 * (a[i] + n + 1 - i0), N);
            ca.expect(cw - casimir_u(w2) == want, [&] { return show(w2); });
          }
          for (int i = 0; i < b.length(); ++i) {
            if (b[i] == b[i + 1]) continue;
            std::vector<int> parts(b.parts().begin(), b.parts().end());
            --parts[static_cast<std::size_t>(i)];
            if (parts.back() == 0) parts.pop_back();
            const CompositeWeight w2(a, Partition(parts), n, N);
            const long i0 = i + 1;
            const Rational want = Rational(1) + Rational(2 * (b[i] - n - i0), N);
            cb.expect(cw - casimir_u(w2) == want, [&] { return show(w2); });
          }
        }
      });
    }
    out.push_back(ca.done());
    out.push_back(cb.done());
  }
  {
    Check cs(suite, "successors match tuple branching");
    Check cn(suite, "sim neighbours match tuple branching");
    for (int N = 1; N <= 7; ++N) {
      for_pairs(3, N, [&](const Partition& a, const Partition& b) {
        for (long n : {0L, 1L}) {
          const CompositeWeight w(a, b, n, N);
          const ExplicitWeight e = compose(w);
          const auto succ = successors(w);
          const auto succ_set = tuple_set(succ);
          const auto raw = oracle::tuple_successors(e);
          const std::set<ExplicitWeight> want(raw.begin(), raw.end());
          cs.expect(succ_set.size() == succ.size() && succ_set == want, [&] { return show(w); });
          std::set<ExplicitWeight> sim_want;
          for (const auto& nu : raw) {
            for (const auto& lam : oracle::tuple_predecessors(nu)) {
              if (lam != e) sim_want.insert(lam);
            }
          }
          const auto sim = sim_neighbors(w);
          const auto sim_set = tuple_set(sim);
          cn.expect(sim_set.size() == sim.size() && sim_set == sim_want, [&] { return show(w); });
        }
      });
    }
    out.push_back(cs.done());
    out.push_back(cn.done());
  }
  {
    Check cp(suite, "successor dimensions sum to N");
    Check ce(suite, "sim dimensions with diagonal sum to N^2");
    Check cb(suite, "sim dimensions bounded by N^2 - 1");
    for (int N = 1; N <= 10; ++N) {
      for_pairs(3, N, [&](const Partition& a, const Partition& b) {
        const CompositeWeight w(a, b, 0, N);
        const BigInt d = dim(w);
        BigInt up = 0;
        const auto succ = successors(w);
        for (const auto& s : succ) up += dim(s);
        cp.expect(up == d * N, [&] { return show(w); });
        BigInt side = 0;
        for (const auto& s : sim_neighbors(w)) side += dim(s);
        ce.expect(side + d * static_cast<long>(succ.size()) == d * N * N, [&] { return show(w); });
        cb.expect(side <= d * (N * N - 1), [&] { return show(w); });
      });
    }
    out.push_back(cp.done());
    out.push_back(ce.done());
    out.push_back(cb.done());
  }
  {
    Check cu(suite, "symmetric group branching up");
    Check cd(suite, "symmetric group branching down");
    Check cs(suite, "symmetric group sim branching");
    for (const Partition& a : partitions_upto(8)) {
      const BigInt d = sym_dim(a);
      BigInt up = 0;
      const auto adds = add_box(a);
      for (const auto& p : adds) up += sym_dim(p);
      cu.expect(up == d * (a.size() + 1), [&] { return a.to_string(); });
      if (!a.empty()) {
        BigInt down = 0;
        for (const auto& p : remove_box(a)) down += sym_dim(p);
        cd.expect(down == d, [&] { return a.to_string(); });
      }
      BigInt side = 0;
      for (const auto& p : sim_partitions(a)) side += sym_dim(p);
      const long weight = a.size() + 1 - static_cast<long>(adds.size());
      cs.expect(side == d * weight, [&] { return a.to_string(); });
    }
    out.push_back(cu.done());
    out.push_back(cd.done());
    out.push_back(cs.done());
  }
  {
    Check cp(suite, "Pieri rule via Schur evaluation");
    Check cl(suite, "Pieri rule for mixed-sign weights");
    Check cm(suite, "Murnaghan-Nakayama rule via Schur evaluation");
    std::mt19937_64 rng(20240611);
    for (int N = 3; N <= 4; ++N) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = unit_circle_points(rng, N);
        for (const Partition& lam : partitions_upto(4)) {
          if (lam.length() > N) continue;
          const auto s_lam = schur_eval(padded(lam, N), x);
          for (int r = 1; r <= 4; ++r) {
            std::complex<double> power = 0.0;
            for (const auto& xi : x) power += std::pow(xi, r);
            std::complex<double> rhs = 0.0;
            double scale = std::abs(power * s_lam);
            for (const auto& step : border_strips(lam, r)) {
              if (step.target.length() > N) continue;
              const auto s = schur_eval(padded(step.target, N), x);
              rhs += (step.height % 2 == 0) ? s : -s;
              scale += std::abs(s);
            }
            const auto lhs = power * s_lam;
            Check& target = r == 1 ? cp : cm;
            target.expect(std::abs(lhs - rhs) <= 1e-9 * std::max(scale, 1e-300),
                          [&] { return lam.to_string() + " r=" + std::to_string(r); });
          }
        }
        for_pairs(2, N, [&](const Partition& a, const Partition& b) {
          if (b.empty()) return;
          const CompositeWeight w(a, b, 0, N);
          std::complex<double> trace = 0.0;
          for (const auto& xi : x) trace += xi;
          const auto lhs = trace * schur_eval(compose(w), x);
          std::complex<double> rhs = 0.0;
          double scale = std::abs(lhs);
          for (const auto& s : successors(w)) {
            const auto v = schur_eval(compose(s), x);
            rhs += v;
            scale += std::abs(v);
          }
          cl.expect(std::abs(lhs - rhs) <= 1e-9 * std::max(scale, 1e-300), [&] { return show(w); });
        });
      }
    }
    out.push_back(cp.done());
    out.push_back(cl.done());
    out.push_back(cm.done());
  }
  return out;
}

std::vector<CheckResult> verify_inequalities() {
  std::vector<CheckResult> out;
  const std::string suite = "inequalities";
  {
    Check lo(suite, "Casimir lower bound k - k^2/N - k^2/N^2");
    Check hi(suite, "Casimir upper bound k + k^2/N");
    Check half(suite, "Casimir lower bound k/2");
    for (int N = 1; N <= 30; ++N) {
      const auto ps = partitions_upto(10);
      for (const Partition& a : ps) {
        for (const Partition& b : ps) {
          if (a.size() + b.size() > 10 || !canonical_pair(a, b, N)) continue;
          const Rational c = casimir_su(a, b, N);
          const long k = a.size() + b.size();
          const Rational k2(k * k);
          const auto tag = [&] { return a.to_string() + "," + b.to_string() + " N=" + std::to_string(N); };
          lo.expect(c >= Rational(k) - k2 / N - k2 / (N * N), tag);
          hi.expect(c <= Rational(k) + k2 / N, tag);
          half.expect(c >= Rational(k, 2), tag);
        }
      }
    }
    out.push_back(lo.done());
    out.push_back(hi.done());
    out.push_back(half.done());
  }
  const double gamma = 0.3;
  {
    Check c(suite, "almost flat Casimir estimate");
    for (int N : {20, 50, 100}) {
      const double threshold = std::pow(static_cast<double>(N), gamma);
      const auto ps = partitions_upto(static_cast<int>(threshold));
      const double bound = 8.0 * std::pow(static_cast<double>(N), 2.0 * gamma - 1.0);
      for (const Partition& a : ps) {
        for (const Partition& b : ps) {
          if (!canonical_pair(a, b, N)) continue;
          const double diff = to_double(casimir_su(a, b, N) - Rational(a.size() + b.size()));
          c.expect(std::fabs(diff) <= bound, [&] { return a.to_string() + "," + b.to_string(); });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "exponent majorisation for successors and sim neighbours");
    const Rational T(2);
    const Rational t(7, 10);
    for (int N : {16, 64}) {
      const int max_size = N == 16 ? 6 : 5;
      const auto ps = partitions_upto(max_size);
      for (const Partition& a : ps) {
        for (const Partition& b : ps) {
          if (!canonical_pair(a, b, N)) continue;
          const CompositeWeight mu(a, b, 0, N);
          const Rational cm = casimir_su(a, b, N);
          const Rational rhs = -T / 8 * (a.size() + b.size()) + t;
          const auto test = [&](const CompositeWeight& lam) {
            const Rational cl = casimir_su(lam.alpha(), lam.beta(), N);
            c.expect(-T / 2 * cm + t / 2 * (cm - cl) <= rhs,
                     [&] { return show(mu) + " -> " + show(lam); });
          };
          test(mu);
          for (const auto& lam : successors(mu)) test(lam);
          for (const auto& lam : sim_neighbors(mu)) test(lam);
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check cc(suite, "content dimension sandwich");
    Check cd(suite, "dimension sandwich");
    for (int N : {50, 200}) {
      const double Nd = N;
      const double threshold = std::pow(Nd, gamma);
      const auto ps = partitions_upto(static_cast<int>(threshold));
      const double e1 = 2.0 * std::pow(Nd, 2.0 * gamma - 1.0);
      const double e2 = 24.0 * std::pow(Nd, 3.0 * gamma - 1.0);
      const auto scaled = [&](const Partition& a) {
        return to_double(Rational(sym_dim(a) * boost::multiprecision::pow(BigInt(N), a.size()),
                                  factorial(a.size())));
      };
      for (const Partition& a : ps) {
        const double ratio = to_double(content_dim(a, N)) / scaled(a);
        cc.expect(ratio >= 1.0 - e1 && ratio <= 1.0 + e1, [&] { return a.to_string(); });
      }
      for (const Partition& a : ps) {
        for (const Partition& b : ps) {
          if (!canonical_pair(a, b, N)) continue;
          const double ratio = static_cast<double>(dim(CompositeWeight(a, b, 0, N))) /
                               (scaled(a) * scaled(b));
          cd.expect(ratio >= 1.0 - e2 && ratio <= 1.0 + e2,
                    [&] { return a.to_string() + "," + b.to_string(); });
        }
      }
    }
    out.push_back(cc.done());
    out.push_back(cd.done());
  }
  return out;
}

std::vector<CheckResult> verify_sums() {
  std::vector<CheckResult> out;
  const std::string suite = "sums";
  {
    Check c(suite, "plane loop single term");
    for (double t : {0.5, 1.0, 2.0}) {
      for (int N : {3, 7, 20}) {
        const double got = plane_wilson_character(t, N);
        c.expect(close(got, plane_wilson(t), 1e-12), [&] { return describe_values(got, plane_wilson(t)); });
      }
    }
    out.push_back(c.done());
  }
  {
    Check ce(suite, "flat expectation closed form");
    Check cm(suite, "flat second moment closed form");
    TruncationPolicy flat;
    flat.k_max = 0;
    const SurfaceSpec spec{2, 2.0, 0.7};
    const double T = spec.total_area;
    const double t = spec.loop_area;
    for (int N : {3, 8, 20}) {
      const double Nd = N;
      const double z = partition_function(GroupKind::unitary, 2, T, N, flat).value;
      const double e = wilson_expectation(GroupKind::unitary, spec, N, flat).value;
      double sum = 0.0;
      for (int n = -flat.n_max; n <= flat.n_max; ++n) {
        const double x = n + t / (T * Nd);
        sum += std::exp(-0.5 * T * x * x);
      }
      const double want = std::exp(-t / 2.0 + t * t / (2.0 * T * Nd * Nd)) * sum;
      ce.expect(close(e * z, want, 1e-12), [&] { return describe_values(e * z, want); });
      const double m = wilson_second_moment(GroupKind::unitary, spec, N, flat).value;
      const double want_m = (1.0 + (Nd * Nd - 1.0) * std::exp(-t)) / (Nd * Nd);
      cm.expect(close(m, want_m, 1e-12), [&] { return describe_values(m, want_m); });
    }
    out.push_back(ce.done());
    out.push_back(cm.done());
  }
  {
    Check c(suite, "small loop normalisation");
    TruncationPolicy p;
    p.k_max = 3;
    p.n_max = 2;
    for (GroupKind g : {GroupKind::unitary, GroupKind::special_unitary}) {
      for (int genus : {1, 2}) {
        for (int N : {3, 5}) {
          const SurfaceSpec spec{genus, 2.0, 1e-8};
          const double e = wilson_expectation(g, spec, N, p).value;
          const double m = wilson_second_moment(g, spec, N, p).value;
          c.expect(std::fabs(e - 1.0) <= 1e-6, [&] { return describe_values(e, 1.0); });
          c.expect(std::fabs(m - 1.0) <= 1e-6, [&] { return describe_values(m, 1.0); });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "brute-force oracle equivalence");
    const SurfaceSpec base{1, 2.0, 0.7};
    for (int N : {3, 4, 5}) {
      for (int k_max : {2, 3}) {
        TruncationPolicy p;
        p.k_max = k_max;
        p.n_max = 2;
        for (GroupKind g : {GroupKind::unitary, GroupKind::special_unitary}) {
          const auto tag = [&](const char* kind) {
            return std::string(kind) + " N=" + std::to_string(N) + " k_max=" + std::to_string(k_max) +
                   (g == GroupKind::unitary ? " U" : " SU");
          };
          for (int genus : {1, 2}) {
            SurfaceSpec spec = base;
            spec.genus = genus;
            const double z = partition_function(g, genus, spec.total_area, N, p).value;
            const double zo = oracle::partition_function(g, genus, spec.total_area, N, p);
            c.expect(close(z, zo, 1e-12), [&] { return tag("Z") + ": " + describe_values(z, zo); });
            const double e = wilson_expectation(g, spec, N, p).value;
            const double eo = oracle::wilson_expectation(g, spec, N, p);
            c.expect(close(e, eo, 1e-12), [&] { return tag("E") + ": " + describe_values(e, eo); });
            const double m = wilson_second_moment(g, spec, N, p).value;
            const double mo = oracle::wilson_second_moment(g, spec, N, p);
            c.expect(close(m, mo, 1e-12), [&] { return tag("M") + ": " + describe_values(m, mo); });
          }
          const double s = sphere_wilson(base.total_area, base.loop_area, N, p, g).value;
          const double so = oracle::sphere_wilson(g, base.total_area, base.loop_area, N, p);
          c.expect(close(s, so, 1e-12), [&] { return tag("sphere") + ": " + describe_values(s, so); });
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(suite, "truncation tail soundness");
    TruncationPolicy small;
    small.k_max = 3;
    small.n_max = 3;
    TruncationPolicy large;
    large.k_max = 7;
    large.n_max = 6;
    for (GroupKind g : {GroupKind::unitary, GroupKind::special_unitary}) {
      for (int genus : {1, 2}) {
        for (int N : {4, 6}) {
          const SurfaceSpec spec{genus, 3.0, 1.0};
          const auto check = [&](const SumReport& lo, const SumReport& hi, const char* what) {
            c.expect(std::fabs(hi.value - lo.value) <= lo.tail_bound,
                     [&] { return std::string(what) + " N=" + std::to_string(N); });
          };
          check(partition_function(g, genus, spec.total_area, N, small),
                partition_function(g, genus, spec.total_area, N, large), "Z");
          check(wilson_expectation(g, spec, N, small), wilson_expectation(g, spec, N, large), "E");
          check(wilson_variance(g, spec, N, small), wilson_variance(g, spec, N, large), "Var");
        }
      }
    }
    out.push_back(c.done());
  }
  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (auto suite : {verify_partitions, verify_identities, verify_inequalities, verify_sums}) {
    auto part = suite();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ymheat
