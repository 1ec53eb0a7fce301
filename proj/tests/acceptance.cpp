// Acceptance run: one PASS/FAIL line per criterion over the shipped examples
// and a fixed batch of seeded random instances. Every comparison is exact;
// the only tolerances are the wall-clock budgets below.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "twistalg/problem_file.hpp"
#include "twistalg/report.hpp"

using namespace twistalg;

namespace {

constexpr int kRandomInstances = 50;
constexpr std::uint64_t kBatchSeed = 20240611;
constexpr double kBudgetDims = 10.0;
constexpr double kBudgetRelations = 30.0;
constexpr double kBudgetClass2 = 5.0;
constexpr double kBudgetFrobeniusLargest = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed = true;
  std::string note;
  void fail(const std::string& why) {
    if (passed) note = why;
    passed = false;
  }
};

bool all_passed(const std::vector<CheckResult>& cs, std::string* first = nullptr) {
  for (const auto& c : cs)
    if (!c.passed) {
      if (first) *first = c.name;
      return false;
    }
  return true;
}

bool check_named(const std::vector<CheckResult>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c.passed;
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print(int k, const char* title, const Outcome& o, const std::string& stats) {
  std::printf("criterion %d  %-34s %s  %s%s%s\n", k, title, o.passed ? "PASS" : "FAIL", stats.c_str(),
              o.note.empty() ? "" : "  first failure: ", o.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string root = argc > 1 ? argv[1] : ".";
  const std::vector<std::string> shipped{"ks3", "quantum_plane", "c2_4_c3_2"};

  std::vector<ProblemSpec> specs;
  for (const auto& n : shipped) specs.push_back(load_problem(root + "/problems/" + n + ".toml"));
  std::mt19937_64 rng(kBatchSeed);
  RandomOptions opt;
  opt.max_p_order = 128;
  opt.max_l_order = 64;
  opt.max_twisted_dim = 400;
  for (int k = 0; k < kRandomInstances; ++k) specs.push_back(random_problem(rng, opt));

  // 1. Dimension formulas (pipeline construction is charged here).
  Outcome c1;
  std::vector<Pipeline> pls;
  auto t0 = Clock::now();
  for (std::size_t k = 0; k < specs.size(); ++k) {
    pls.push_back(run_pipeline(specs[k]));
    const Pipeline& pl = pls.back();
    const std::int64_t order_p = pl.in.p.group().order();
    const std::int64_t order_l = pl.in.l.order();
    const std::int64_t rad = static_cast<std::int64_t>(pl.in.h.radical_elements().size());
    const std::int64_t a = static_cast<std::int64_t>(pl.rq.a_span.rank());
    const std::int64_t m = static_cast<std::int64_t>(pl.m.span.rank());
    const std::int64_t t = static_cast<std::int64_t>(pl.ta.algebra().dim());
    if (a != rad * order_p || a * m != t || t != order_p * order_l)
      c1.fail("instance " + std::to_string(k) + " dims " + std::to_string(a) + "/" + std::to_string(m) + "/" +
              std::to_string(t));
    if (order_p > 128 || order_l > 64) c1.fail("instance " + std::to_string(k) + " exceeds the size bounds");
  }
  const double s1 = seconds_since(t0);
  if (s1 >= kBudgetDims) c1.fail("took " + std::to_string(s1) + " s");
  {
    std::ostringstream st;
    st << "(" << pls.size() << " instances, exact, " << s1 << " s < " << kBudgetDims << " s)";
    print(1, "dimension formulas", c1, st.str());
  }

  // 2. Relations in the algebra and three-way dimension agreement.
  Outcome c2;
  t0 = Clock::now();
  for (std::size_t k = 0; k < pls.size(); ++k) {
    const Pipeline& pl = pls[k];
    std::string first;
    if (!all_passed(verify_in_algebra(pl.q, pl.rq, pl.ta, pl.m), &first))
      c2.fail("instance " + std::to_string(k) + ": " + first);
    const std::int64_t rank = static_cast<std::int64_t>(pl.rq.a_span.rank());
    const auto nf = presentation_dimension(pl.q);
    std::int64_t closure = -1;
    try {
      closure = independent_dimension_count(pl.q, pl.in.field, 4 * nf.value_or(rank));
    } catch (const Error&) {
    }
    if (!nf || *nf != rank || closure != rank)
      c2.fail("instance " + std::to_string(k) + " rank " + std::to_string(rank) + " closure " + std::to_string(closure));
  }
  const double s2 = seconds_since(t0);
  if (s2 >= kBudgetRelations) c2.fail("took " + std::to_string(s2) + " s");
  {
    std::ostringstream st;
    st << "(" << pls.size() << " instances, exact, " << s2 << " s < " << kBudgetRelations << " s)";
    print(2, "relations and dimension agreement", c2, st.str());
  }

  // 3. Character identities, all eta.
  Outcome c3;
  t0 = Clock::now();
  for (std::size_t k = 0; k < pls.size(); ++k) {
    std::string first;
    if (!all_passed(class2_checks(pls[k].in.h, pls[k].in.fam, Level::Full, 0), &first))
      c3.fail("instance " + std::to_string(k) + ": " + first);
  }
  const double s3 = seconds_since(t0);
  if (s3 >= kBudgetClass2) c3.fail("took " + std::to_string(s3) + " s");
  {
    std::ostringstream st;
    st << "(" << pls.size() << " instances, all eta, " << s3 << " s < " << kBudgetClass2 << " s)";
    print(3, "class-2 character identities", c3, st.str());
  }

  // 4. Frobenius twist isomorphism on all basis pairs.
  Outcome c4;
  double largest_time = 0.0;
  std::size_t largest_dim = 0;
  for (std::size_t k = 0; k < pls.size(); ++k) {
    const Pipeline& pl = pls[k];
    t0 = Clock::now();
    std::string first;
    try {
      const FrobWitness w = build_twist_isomorphism(pl.in, pl.ta);
      if (!all_passed(verify_twist(pl.in, pl.ta, w), &first)) c4.fail("instance " + std::to_string(k) + ": " + first);
    } catch (const Error& e) {
      c4.fail("instance " + std::to_string(k) + ": " + e.what());
    }
    const double s = seconds_since(t0);
    if (pl.ta.algebra().dim() >= largest_dim) {
      largest_dim = pl.ta.algebra().dim();
      largest_time = s;
    }
  }
  if (largest_time >= kBudgetFrobeniusLargest) c4.fail("largest instance took " + std::to_string(largest_time) + " s");
  {
    std::ostringstream st;
    st << "(" << pls.size() << " instances, largest dim " << largest_dim << " in " << largest_time << " s < "
       << kBudgetFrobeniusLargest << " s)";
    print(4, "Frobenius twist isomorphism", c4, st.str());
  }

  // 5. Golden instances.
  Outcome c5;
  {
    const Pipeline& s3 = pls[0];
    if (s3.q.vertices.size() != 2 || s3.q.arrows.size() != 2 || s3.rq.a_span.rank() != 6) c5.fail("kS3 shape");
    const Pipeline& qp = pls[1];
    bool q_primitive4 = qp.q.commutations.size() == 1 && qp.q.commutations[0].q.true_order() == 4;
    bool powers5 = qp.q.powers.size() == 2;
    for (const auto& pr : qp.q.powers) powers5 = powers5 && pr.length == 5;
    bool loops = qp.q.vertices.size() == 1 && qp.q.arrows.size() == 2;
    for (const auto& a : qp.q.arrows) loops = loops && a.source == a.target;
    const bool mat4 = qp.m.span.rank() == 16 && verify_tensor_decomposition(qp.rq, qp.m, qp.ta).passed;
    if (!q_primitive4 || !powers5 || !loops || !mat4 || qp.rq.a_span.rank() != 25) c5.fail("quantum plane shape");
    const Pipeline& c = pls[2];
    bool squares = c.q.powers.size() == 4;
    for (const auto& pr : c.q.powers) squares = squares && pr.length == 2;
    if (c.q.vertices.size() != 1 || c.q.arrows.size() != 4 || c.q.commutations.size() != 6 || !squares ||
        c.rq.a_span.rank() != 16)
      c5.fail("(C2)^4 x| C3^2 shape");
    for (std::size_t k = 0; k < shipped.size(); ++k) {
      const Pipeline again = run_pipeline(load_problem(root + "/problems/" + shipped[k] + ".toml"));
      PresentationReport r1{&pls[k], 0, verify_all(pls[k], Level::Quick, 0), std::nullopt};
      PresentationReport r2{&again, 0, verify_all(again, Level::Quick, 0), std::nullopt};
      const std::string golden = slurp(root + "/tests/golden/" + shipped[k] + ".txt");
      if (report_text(r1) != report_text(r2) || report_json(r1) != report_json(r2)) c5.fail(shipped[k] + " not reproducible");
      if (report_text(r1) != golden) c5.fail(shipped[k] + " differs from golden report");
    }
  }
  print(5, "golden instances", c5, "(3 instances, byte-identical reports)");

  // 6. Negative controls: every q, every power relation, beta0.
  Outcome c6;
  int q_faults = 0, power_faults = 0, beta_faults = 0, q_skipped = 0;
  for (std::size_t k = 0; k < pls.size(); ++k) {
    const Pipeline& pl = pls[k];
    const FieldSpec& f = pl.in.field;
    const auto primes = prime_factors(f.size() - 1);
    for (std::size_t r = 0; r < pl.q.commutations.size(); ++r) {
      if (f.size() == 2) {
        ++q_skipped;
        continue;
      }
      QuiverPresentation bad = pl.q;
      bad.commutations[r].q = (bad.commutations[r].q * RootScalar(primes.back(), 1)).reduced();
      ++q_faults;
      if (check_named(verify_in_algebra(bad, pl.rq, pl.ta, pl.m), "commutation relations"))
        c6.fail("instance " + std::to_string(k) + " q " + std::to_string(r) + " undetected");
    }
    for (std::size_t r = 0; r < pl.q.powers.size(); ++r) {
      QuiverPresentation bad = pl.q;
      bad.powers.erase(bad.powers.begin() + static_cast<std::ptrdiff_t>(r));
      ++power_faults;
      // The verdict must flip, and the closure of the weakened presentation
      // must no longer match the algebra (or run past its cap).
      bool caught = !all_passed(verify_in_algebra(bad, pl.rq, pl.ta, pl.m));
      const std::int64_t rank = static_cast<std::int64_t>(pl.rq.a_span.rank());
      try {
        if (independent_dimension_count(bad, f, 4 * rank) == rank) caught = false;
      } catch (const Error&) {
      }
      if (!caught) c6.fail("instance " + std::to_string(k) + " power " + std::to_string(r) + " undetected");
    }
    if (pl.in.l.order() > 1) {
      ++beta_faults;
      const FrobWitness w = build_twist_isomorphism(pl.in, pl.ta, Fault::CorruptBeta);
      bool mult_failed = false;
      for (const auto& c : verify_twist(pl.in, pl.ta, w))
        if (c.code == Errc::MultiplicativityFails && !c.passed) mult_failed = true;
      if (!mult_failed) c6.fail("instance " + std::to_string(k) + " corrupt beta undetected");
    }
  }
  {
    std::ostringstream st;
    st << "(" << q_faults << " q perturbations, " << power_faults << " dropped powers, " << beta_faults
       << " corrupted beta; " << q_skipped << " q over F_2 have no perturbation)";
    print(6, "negative controls", c6, st.str());
  }

  // 7. Scope statement.
  Outcome c7;
  for (std::size_t k = 0; k < shipped.size(); ++k) {
    PresentationReport r{&pls[k], 0, {}, std::nullopt};
    const std::string text = report_text(r);
    if (text.find("verification field:") == std::string::npos || text.find("Witt-vector lifts are not computed") == std::string::npos)
      c7.fail(shipped[k] + " report lacks the verification field statement");
  }
  print(7, "verification field stated", c7, "(Witt-vector lifts out of scope)");

  const bool ok = c1.passed && c2.passed && c3.passed && c4.passed && c5.passed && c6.passed && c7.passed;
  std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
  return ok ? 0 : 1;
}
