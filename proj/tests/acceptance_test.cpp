// Acceptance gate: one pass/fail line per criterion, with the runtime budget
// enforced. argv[1] is the path to the command-line binary (used by the
// determinism criterion). Exit 0 iff every criterion passes.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "voamat/gr_suites.hpp"
#include "voamat/laurent.hpp"
#include "voamat/voa_suite.hpp"
#include "voamat/zhu.hpp"

using namespace voamat;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = secs <= budget_seconds;
  if (!in_budget && detail.empty())
    detail = "runtime budget exceeded (" + std::to_string(budget_seconds) + "s)";
  bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (pass ? "PASS" : "FAIL") << " criterion " << number << " [" << secs << "s/"
     << budget_seconds << "s] " << label;
  if (!pass && !detail.empty()) os << " -- " << detail;
  std::cout << os.str() << std::endl;
}

VertexAlgebra heis(int wmax) {
  return VertexAlgebra({AlgebraKind::Heisenberg, Rational(1), wmax});
}
VertexAlgebra vir(const Rational& c, int wmax) {
  return VertexAlgebra({AlgebraKind::Virasoro, c, wmax});
}

bool report_ok(const Report& r, std::string& detail) {
  if (!r.pass) detail = r.suite + ": " + r.first_failure();
  return r.pass;
}

std::string run_capture(const std::string& cmd, int& exit_code) {
  fs::path out = fs::temp_directory_path() / "voamat-acceptance-out.txt";
  int status = std::system((cmd + " > " + out.string() + " 2> /dev/null").c_str());
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "binomial collapse identity, exhaustive 0<=k,n,l<=6", 1.0,
            [](std::string& detail) {
              for (int k = 0; k <= 6; ++k)
                for (int n = 0; n <= 6; ++n)
                  for (int l = 0; l <= 6; ++l)
                    for (int p = 0; p <= n; ++p)
                      if (!binom_sum_identity_check(k, n, l, p)) {
                        detail = "failed at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                 " l=" + std::to_string(l) + " p=" + std::to_string(p);
                        return false;
                      }
              return true;
            });

  criterion(2, "vertex-algebra axiom suite, Heisenberg w<=6 and Virasoro w<=8", 30.0,
            [](std::string& detail) {
              auto h = heis(6);
              if (!report_ok(voa_axiom_suite(h, 8000, 2024), detail)) return false;
              for (const Rational& c : {rat(1, 2), rat(1), rat(-22, 5)}) {
                auto v = vir(c, 8);
                if (!report_ok(voa_axiom_suite(v, 8000, 2024), detail)) return false;
              }
              return true;
            });

  criterion(3, "two-sided unit laws, wt<=4, k,l<=N<=2", 60.0, [](std::string& detail) {
    auto h = heis(11);
    ReductionEngine base(h, 2);
    for (int N = 0; N <= 2; ++N) {
      ReductionEngine eng(h, N);
      for (int k = 0; k <= N; ++k)
        for (int l = 0; l <= N; ++l) eng.seed_slot(k, l, base.slot_basis(k, l));
      for (int k = 0; k <= N; ++k)
        for (int l = 0; l <= N; ++l)
          for (const auto& pv : h.basis_upto(4)) {
            UMatrix e = UMatrix::elementary(N, k, l, State::monomial(pv));
            if (!(diamond(h, unit_matrix(N), e) == e)) {
              detail = "left unit failed";
              return false;
            }
            UMatrix right = diamond(h, e, unit_matrix(N));
            if (!(right == right_unit_closed_form(h, N, State::monomial(pv), k, l))) {
              detail = "right-unit closed form mismatch";
              return false;
            }
            if (!eng.canonical_reduce(right - e, 9).is_zero()) {
              detail = "right-unit defect did not reduce at (" + std::to_string(k) + "," +
                       std::to_string(l) + ") v=" + partition_brief(pv);
              return false;
            }
          }
    }
    return true;
  });

  criterion(4, "shifted-product closed form and O-membership, wt<=3, k,n,l<=2", 60.0,
            [](std::string& detail) {
              auto h = heis(13);
              ReductionEngine eng(h, 2);
              for (int k = 0; k <= 2; ++k)
                for (int n = 0; n <= 2; ++n)
                  for (int l = 0; l <= 2; ++l)
                    for (const auto& pu : h.basis_upto(3))
                      for (const auto& pv : h.basis_upto(3)) {
                        State u = State::monomial(pu), v = State::monomial(pv);
                        std::string at = " at (" + std::to_string(k) + "," + std::to_string(n) +
                                         "," + std::to_string(l) + ") u=" + partition_brief(pu) +
                                         " v=" + partition_brief(pv);
                        if (!lder_product_identity_check(h, 2, u, v, k, n, l)) {
                          detail = "closed form mismatch" + at;
                          return false;
                        }
                        State lu = h.sl2(-1, u) + h.sl2(0, u) + Rational(n - k) * u;
                        State lv = h.sl2(-1, v) + h.sl2(0, v) + Rational(l - n) * v;
                        UMatrix first = diamond(h, UMatrix::elementary(2, k, n, lu),
                                                UMatrix::elementary(2, n, l, v));
                        UMatrix second = diamond(h, UMatrix::elementary(2, k, n, u),
                                                 UMatrix::elementary(2, n, l, lv));
                        if (!eng.canonical_reduce(first, 12).is_zero()) {
                          detail = "left-shifted product did not reduce" + at;
                          return false;
                        }
                        if (!eng.canonical_reduce(second, 12).is_zero()) {
                          detail = "right-shifted product did not reduce" + at;
                          return false;
                        }
                      }
              return true;
            });

  // Shared graded structures for criteria 5-7.
  auto halg = std::make_unique<VertexAlgebra>(heis(13));
  auto valg = std::make_unique<VertexAlgebra>(vir(rat(1, 2), 13));
  auto fockW = std::make_unique<LbModule>(
      *halg, std::vector<ModuleComponent>{{ModuleComponent::Kind::Fock, Rational(1), Rational(0)}},
      6);
  auto vermaW = std::make_unique<LbModule>(
      *valg,
      std::vector<ModuleComponent>{{ModuleComponent::Kind::Verma, Rational(0), rat(1, 16)}}, 6);
  std::map<std::pair<int, int>, std::unique_ptr<GrStructure>> gr;  // (module 0/1, N)
  auto gr_of = [&](int mod, int N) -> GrStructure& {
    auto key = std::make_pair(mod, N);
    if (!gr.count(key))
      gr[key] = std::make_unique<GrStructure>(
          build_gr(mod == 0 ? *fockW : *vermaW, N, 2, 10));
    return *gr[key];
  };

  criterion(5, "matrix action is a homomorphism, wt<=4, depth<=4, both modules, N<=2", 300.0,
            [&](std::string& detail) {
              for (int mod = 0; mod <= 1; ++mod)
                for (int N = 0; N <= 2; ++N) {
                  Report r = homomorphism_suite(gr_of(mod, N), 4, 0);
                  if (!report_ok(r, detail)) return false;
                }
              return true;
            });

  criterion(6, "O-generators annihilate the graded space, slot<=2, weight<=4", 120.0,
            [&](std::string& detail) {
              for (int mod = 0; mod <= 1; ++mod) {
                Report r = o_annihilation_suite(gr_of(mod, 2), 4);
                if (!report_ok(r, detail)) return false;
              }
              return true;
            });

  criterion(7, "graded-module axioms on both families, N<=2", 60.0, [&](std::string& detail) {
    for (int mod = 0; mod <= 1; ++mod)
      for (int N = 0; N <= 2; ++N) {
        Report r = graded_axiom_suite(gr_of(mod, N), 4);
        if (!report_ok(r, detail)) return false;
      }
    return true;
  });

  criterion(8, "depth filtration equals depth truncation on the Fock module, n<=3, depth<=5",
            120.0, [&](std::string& detail) {
              auto h = heis(8);
              LbModule W(h, {{ModuleComponent::Kind::Fock, Rational(1), Rational(0)}}, 5);
              // Stabilization over two cutoff increments is built into the search.
              OmegaFiltration F = stable_omega_filtration(W, 3, 2, 10);
              for (int n = 0; n <= 3; ++n)
                for (int d = 0; d <= 5; ++d) {
                  int expect = d <= n ? int(W.basis(d).size()) : 0;
                  if (F.dim(n, d) != expect) {
                    detail = "dim mismatch at n=" + std::to_string(n) +
                             " d=" + std::to_string(d) + ": got " + std::to_string(F.dim(n, d)) +
                             ", expected " + std::to_string(expect);
                    return false;
                  }
                }
              return true;
            });

  criterion(9, "level products: corner agreement, centrality, polynomial probe", 120.0,
            [](std::string& detail) {
              auto h = heis(15);
              auto v = vir(rat(-22, 5), 15);
              for (const VertexAlgebra* alg : {&h, &v})
                for (int N = 0; N <= 3; ++N)
                  for (const auto& pu : alg->basis_upto(4))
                    for (const auto& pv : alg->basis_upto(4)) {
                      State u = State::monomial(pu), w = State::monomial(pv);
                      UMatrix prod = diamond(*alg, UMatrix::elementary(N, N, N, u),
                                             UMatrix::elementary(N, N, N, w));
                      if (!(dlm_product(*alg, N, u, w) == prod.at(N, N))) {
                        detail = "corner disagreement at N=" + std::to_string(N);
                        return false;
                      }
                    }
              {
                auto h10 = heis(10);
                ReductionEngine eng0(h10, 0);
                if (!report_ok(center_check(eng0, 0, 4, 8), detail)) return false;
                ReductionEngine eng1(h10, 1);
                if (!report_ok(center_check(eng1, 1, 4, 8), detail)) return false;
                Report probe = polynomial_algebra_probe(eng0, 5);
                if (!report_ok(probe, detail)) return false;
                // Independence rank: exactly one surviving class per weight.
                auto dims = eng0.quotient_dimension_table(5)[{0, 0}];
                for (int w = 0; w <= 5; ++w)
                  if (dims[w] != 1) {
                    detail = "level-0 quotient dimension at weight " + std::to_string(w) +
                             " is " + std::to_string(dims[w]);
                    return false;
                  }
              }
              return true;
            });

  criterion(10, "C2 quotient dimensions and 50 sampled associators", 120.0,
            [](std::string& detail) {
              auto h = heis(9);
              if (cn_quotient_dimension(h, 2, 4) != std::vector<int>{1, 1, 1, 1, 1}) {
                detail = "C2 dims differ from 1,1,1,1,1";
                return false;
              }
              ReductionEngine eng(h, 0);
              std::mt19937_64 rng(424242);
              // Sample triples whose total weight stays within the reduce cutoff.
              auto b = h.basis_upto(4);
              std::vector<std::array<Partition, 3>> triples;
              for (const auto& pu : b)
                for (const auto& pv : b)
                  for (const auto& pw : b)
                    if (partition_weight(pu) + partition_weight(pv) + partition_weight(pw) <= 4)
                      triples.push_back({pu, pv, pw});
              std::shuffle(triples.begin(), triples.end(), rng);
              triples.resize(50);
              for (int t = 0; t < 50; ++t) {
                State u = State::monomial(triples[t][0]), v = State::monomial(triples[t][1]),
                      w = State::monomial(triples[t][2]);
                State assoc = dlm_product(h, 0, dlm_product(h, 0, u, v), w) -
                              dlm_product(h, 0, u, dlm_product(h, 0, v, w));
                if (!eng.canonical_reduce(UMatrix::elementary(0, 0, 0, assoc), 4).is_zero()) {
                  detail = "associator " + std::to_string(t) + " did not reduce";
                  return false;
                }
              }
              return true;
            });

  criterion(11, "two cold verify-all runs are byte-identical", 600.0, [&](std::string& detail) {
    if (cli.empty()) {
      detail = "no CLI binary path supplied";
      return false;
    }
    std::string config =
        " verify-all --algebra heisenberg --mu 1 --N 1 --weight-cutoff 4 --depth-cutoff 4";
    int e1 = 0, e2 = 0;
    std::string out1 = run_capture(cli + config, e1);
    std::string out2 = run_capture(cli + config, e2);
    if (e1 != 0 || e2 != 0) {
      detail = "verify-all exit codes " + std::to_string(e1) + "/" + std::to_string(e2);
      return false;
    }
    if (out1 != out2) {
      detail = "artifacts differ between runs";
      return false;
    }
    if (out1.empty()) {
      detail = "empty artifact";
      return false;
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(g_failures) +
                                      " criterion(s) failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
