#include "bici/cli.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bici/catalog.hpp"
#include "bici/cispec.hpp"
#include "bici/combinat.hpp"
#include "bici/errors.hpp"
#include "bici/koszul.hpp"
#include "bici/oracle.hpp"
#include "bici/tower.hpp"

namespace bici::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Integers that fit a long are JSON numbers; anything larger is a decimal string.
Json exact(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json exact(const Rational& q) {
  if (q.get_den() == 1) return exact(Integer(q.get_num()));
  return Json(q.get_str());
}

Json pair_json(Bidegree d) { return Json::array({d.a, d.b}); }

Json degrees_json(const std::vector<Bidegree>& degrees) {
  Json arr = Json::array();
  for (const auto& d : degrees) arr.push_back(pair_json(d));
  return arr;
}

Json spec_input(const CiSpec& spec) {
  return Json{{"m", spec.space().m}, {"n", spec.space().n}, {"bidegrees", degrees_json(spec.bidegrees())}};
}

std::string degrees_text(const std::vector<Bidegree>& degrees) {
  std::ostringstream os;
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? " " : "") << degrees[i];
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct SpecArgs {
  int m = 0;
  int n = 0;
  std::string bidegrees;

  void attach(CLI::App* cmd) {
    cmd->add_option("--m", m, "dimension of the first factor P^m")->required();
    cmd->add_option("--n", n, "dimension of the second factor P^n")->required();
    cmd->add_option("--bidegrees", bidegrees, "generator bidegrees, e.g. \"1,1;3,3\"")->required();
  }
  CiSpec spec() const { return CiSpec::make(m, n, parse_bidegree_list(bidegrees)); }
};

// Each command fills the machine report and a human-readable rendering.
struct Outcome {
  Json report;
  std::string pretty;
  int code = kSuccess;
};

Json envelope(std::string_view command, Json input, Json result) {
  return Json{{"command", std::string(command)},
              {"version", std::string(kVersion)},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

Outcome cohomology_command(int m, int n, long a, long b) {
  const AmbientSpace space(m, n);
  const Bidegree d{a, b};
  const auto h = line_bundle_cohomology(space, d);
  Json dims = Json::array();
  for (const auto& x : h.dims) dims.push_back(exact(x));
  Outcome o;
  o.report = envelope("cohomology", Json{{"m", m}, {"n", n}, {"a", a}, {"b", b}},
                      Json{{"h", dims}, {"euler_characteristic", exact(euler_characteristic(space, d))}});
  std::ostringstream os;
  os << "O(" << a << "," << b << ") on P^" << m << " x P^" << n << "\n";
  for (std::size_t i = 0; i < h.size(); ++i) os << "  h^" << i << " = " << h[i].get_str() << "\n";
  os << "  chi = " << euler_characteristic(space, d).get_str() << "\n";
  o.pretty = os.str();
  return o;
}

Outcome check_command(const CiSpec& spec) {
  const Bidegree w = dualizing_bidegree(spec);
  Json result{{"regular", is_regular_sequence_criterion(spec)},
              {"regular_outside_hypothesis", regular_criterion_outside_hypothesis(spec)},
              {"acm_order", is_acm_order(spec)},
              {"acm_order_all_subsets", is_acm_order_all_subsets(spec)},
              {"acm", is_acm(spec)},
              {"canonical_ample", is_canonical_ample(spec)},
              {"dualizing", pair_json(w)},
              {"stabilizer_finite", stabilizer_is_finite(spec)}};
  Outcome o;
  std::ostringstream os;
  os << spec.to_string() << "\n"
     << "  regular sequence   " << yes_no(result["regular"])
     << (result["regular_outside_hypothesis"].get<bool>() ? "  (warning: outside the criterion's hypothesis)" : "")
     << "\n"
     << "  ACM ordering       " << yes_no(result["acm_order"])
     << "  (all subsets: " << yes_no(result["acm_order_all_subsets"]) << ")\n"
     << "  ACM                " << yes_no(result["acm"]) << "\n"
     << "  canonical, ample   " << yes_no(result["canonical_ample"]) << "\n"
     << "  dualizing          O" << w << "\n"
     << "  finite stabilizer  " << yes_no(result["stabilizer_finite"]) << "\n";
  o.pretty = os.str();
  o.report = envelope("check", spec_input(spec), std::move(result));
  return o;
}

Outcome hilbert_command(const CiSpec& spec) {
  const auto p = hilbert_polynomial(spec);
  Json coefficients = Json::array();
  for (const auto& c : p.coefficients()) coefficients.push_back(exact(c));
  Json result{{"hilbert_polynomial", p.to_string()}, {"coefficients", coefficients}, {"degree", p.degree()}};
  std::ostringstream os;
  os << spec.to_string() << "\n  p(t) = " << p.to_string() << "\n";
  if (spec.dimension() == 1) {
    const auto g = genus_of_curve(spec);
    result["genus"] = exact(g.genus);
    result["canonical"] = g.canonical;
    result["degree_is_2g_minus_2"] = g.degree_is_2g_minus_2;
    os << "  genus " << g.genus.get_str() << ", degree " << g.degree.get_str()
       << (g.canonical ? ", canonical" : "") << "\n";
  }
  Outcome o;
  o.report = envelope("hilbert", spec_input(spec), std::move(result));
  o.pretty = os.str();
  return o;
}

Outcome tower_command(const CiSpec& spec) {
  const auto t = moduli_dimension(spec);
  Json levels = Json::array();
  std::ostringstream os;
  os << spec.to_string() << "\n"
     << "  bidegree  mult  h0  kernel  rank  fiber\n";
  for (const auto& l : t.levels) {
    levels.push_back(Json{{"bidegree", pair_json(l.degree)},
                          {"multiplicity", l.multiplicity},
                          {"ambient_sections", exact(l.ambient_sections)},
                          {"kernel_dim", exact(l.kernel_dim)},
                          {"rank", exact(l.rank)},
                          {"fiber_dim", exact(l.fiber_dim)}});
    std::ostringstream deg;
    deg << l.degree;
    os << "  " << std::left << std::setw(8) << deg.str() << std::right << std::setw(6) << l.multiplicity
       << std::setw(4) << l.ambient_sections.get_str() << std::setw(8) << l.kernel_dim.get_str() << std::setw(6)
       << l.rank.get_str() << std::setw(7) << l.fiber_dim.get_str() << "\n";
  }
  os << "  dim H = " << t.hilbert_dim.get_str() << ", dim G = " << t.group_dim.get_str()
     << ", dim M = " << t.moduli_dim.get_str() << ", finite stabilizer " << yes_no(t.stabilizer_finite) << "\n";
  Outcome o;
  o.report = envelope("tower", spec_input(spec),
                      Json{{"levels", levels},
                           {"hilbert_dim", exact(t.hilbert_dim)},
                           {"group_dim", exact(t.group_dim)},
                           {"moduli_dim", exact(t.moduli_dim)},
                           {"stabilizer_finite", t.stabilizer_finite}});
  o.pretty = os.str();
  return o;
}

Outcome enumerate_command(int m, int n, bool merge_swap) {
  const AmbientSpace space(m, n);
  auto entries = enumerate_canonical(space);
  if (merge_swap) entries = merge_swap_equivalent(std::move(entries));
  Json arr = Json::array();
  std::ostringstream os;
  os << "canonical ample complete intersections in P^" << m << " x P^" << n << ": " << entries.size() << "\n";
  for (const auto& e : entries) {
    arr.push_back(Json{{"bidegrees", degrees_json(e.spec.bidegrees())},
                       {"genus", exact(e.genus)},
                       {"hilbert_dim", exact(e.hilbert_dim)},
                       {"moduli_dim", exact(e.moduli_dim)},
                       {"stabilizer_finite", e.stabilizer_finite}});
    os << "  " << degrees_text(e.spec.bidegrees()) << "  g=" << e.genus.get_str()
       << "  dim H=" << e.hilbert_dim.get_str() << "  dim M=" << e.moduli_dim.get_str() << "\n";
  }
  Outcome o;
  o.report = envelope("enumerate", Json{{"m", m}, {"n", n}, {"merge_swap", merge_swap}},
                      Json{{"count", entries.size()}, {"entries", arr}});
  o.pretty = os.str();
  return o;
}

Outcome verify_command(const CiSpec& spec, long d_max, std::uint32_t prime, std::uint64_t seed, int trials) {
  const auto r = verify_spec(spec, d_max, prime, seed, trials);
  Json rows = Json::array();
  std::ostringstream os;
  os << spec.to_string() << "  p=" << prime << " seed=" << seed << " trials=" << trials << "\n"
     << "   d  predicted  observed            verdict\n";
  for (const auto& row : r.rows) {
    Json observed = Json::array();
    std::ostringstream obs;
    for (std::size_t i = 0; i < row.observed.size(); ++i) {
      observed.push_back(row.observed[i]);
      obs << (i ? "," : "") << row.observed[i];
    }
    rows.push_back(Json{{"d", row.d}, {"predicted", exact(row.predicted)}, {"observed", observed}, {"pass", row.pass}});
    os << std::setw(4) << row.d << std::setw(11) << row.predicted.get_str() << "  " << std::left << std::setw(20)
       << obs.str() << std::right << (row.pass ? "pass" : "FAIL") << "\n";
  }
  Json input = spec_input(spec);
  input["dmax"] = d_max;
  input["prime"] = prime;
  input["seed"] = seed;
  input["trials"] = trials;
  Outcome o;
  o.report = envelope("verify", std::move(input), Json{{"rows", rows}, {"pass", r.all_pass()}});
  o.pretty = os.str();
  o.code = r.all_pass() ? kSuccess : kOracleMismatch;
  return o;
}

}  // namespace

std::vector<std::pair<long, long>> parse_bidegree_list(std::string_view text) {
  std::vector<std::pair<long, long>> out;
  std::size_t start = 0;
  std::size_t index = 1;
  while (true) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view piece = text.substr(start, end - start);
    const auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << "bidegree list: pair " << index << " at offset " << start + 1 << " (\"" << piece << "\"): " << why;
      throw InvalidInput(os.str());
    };
    const std::size_t comma = piece.find(',');
    if (trim(piece).empty()) fail("empty pair");
    if (comma == std::string_view::npos) fail("expected \"a,b\"");
    if (piece.find(',', comma + 1) != std::string_view::npos) fail("more than two entries");
    long values[2];
    const std::string_view parts[2] = {trim(piece.substr(0, comma)), trim(piece.substr(comma + 1))};
    for (int k = 0; k < 2; ++k) {
      const auto* first = parts[k].data();
      const auto* last = first + parts[k].size();
      auto [ptr, ec] = std::from_chars(first, last, values[k]);
      if (parts[k].empty() || ec != std::errc() || ptr != last) fail("\"" + std::string(parts[k]) + "\" is not an integer");
    }
    out.emplace_back(values[0], values[1]);
    if (end == text.size()) break;
    start = end + 1;
    ++index;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for complete intersections in P^m x P^n.\n"
               "Reports are JSON on stdout; diagnostics go to stderr.\n"
               "Exit codes: 0 ok, 2 invalid input, 3 criterion violation, 4 oracle mismatch.",
               "bici"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  bool pretty = false;
  std::string out_path;
  app.add_flag("--pretty", pretty, "print a human-readable table instead of JSON");
  app.add_option("--out", out_path, "also write the report to this file");

  int cm = 0, cn = 0;
  long ca = 0, cb = 0;
  auto* cohomology = app.add_subcommand("cohomology", "cohomology of O(a,b) on P^m x P^n");
  cohomology->add_option("--m", cm, "dimension of the first factor")->required();
  cohomology->add_option("--n", cn, "dimension of the second factor")->required();
  cohomology->add_option("--a", ca, "first twist")->required();
  cohomology->add_option("--b", cb, "second twist")->required();

  SpecArgs check_args, hilbert_args, tower_args, verify_args;
  auto* check = app.add_subcommand("check", "regular-sequence, ACM and canonical criteria");
  check_args.attach(check);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial, and genus for curves");
  hilbert_args.attach(hilbert);
  auto* tower = app.add_subcommand("tower", "Hilbert scheme and moduli dimensions");
  tower_args.attach(tower);

  int em = 0, en = 0;
  bool merge_swap = false;
  auto* enumerate = app.add_subcommand("enumerate", "canonical curves cut out by ample divisors");
  enumerate->add_option("--m", em, "dimension of the first factor")->required();
  enumerate->add_option("--n", en, "dimension of the second factor")->required();
  enumerate->add_flag("--merge-swap", merge_swap, "identify entries exchanged by swapping the factors (m = n)");

  long d_max = 4;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  auto* verify = app.add_subcommand("verify", "compare Koszul counts with ranks over F_p");
  verify_args.attach(verify);
  verify->add_option("--dmax", d_max, "largest diagonal degree checked")->capture_default_str();
  verify->add_option("--prime", prime, "prime modulus, at least 8192")->capture_default_str();
  verify->add_option("--seed", seed, "master random seed")->capture_default_str();
  verify->add_option("--trials", trials, "independent samples per degree")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  Outcome outcome;
  try {
    if (*cohomology)
      outcome = cohomology_command(cm, cn, ca, cb);
    else if (*check)
      outcome = check_command(check_args.spec());
    else if (*hilbert)
      outcome = hilbert_command(hilbert_args.spec());
    else if (*tower)
      outcome = tower_command(tower_args.spec());
    else if (*enumerate)
      outcome = enumerate_command(em, en, merge_swap);
    else
      outcome = verify_command(verify_args.spec(), d_max, prime, seed, trials);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotAcm& e) {
    err << "error: " << e.what() << "\n";
    return kCriterionViolation;
  } catch (const InfeasibleTower& e) {
    err << "error: " << e.what() << "\n";
    return kCriterionViolation;
  }

  const std::string text = pretty ? outcome.pretty : outcome.report.dump(2) + "\n";
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInvalidInput;
    }
    file << text;
  }
  if (outcome.code == kOracleMismatch) err << "error: oracle rank disagrees with the Koszul prediction\n";
  return outcome.code;
}

}  // namespace bici::cli
