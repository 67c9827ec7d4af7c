#include "pauli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "pauli/errors.hpp"
#include "pauli/matrix_engine.hpp"
#include "pauli/mub.hpp"
#include "pauli/second_quantization.hpp"
#include "pauli/serialization.hpp"
#include "pauli/spin_models.hpp"
#include "pauli/text.hpp"

namespace pauli::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;

  std::string a, b;
  bool dump = false;
  bool coincidence = false;

  std::size_t n = 0;
  bool count = false;
  bool closure = false;

  std::size_t random_pairs = 0;
  std::size_t max_n = 5;

  std::string model = "xxz";
  double j12 = 1.0;
  double j3 = 1.0;
  std::string bc = "periodic";
  std::string symmetry;
  bool verify = false;

  std::size_t family = 1;
  std::string table;

  std::size_t modes = 2;
  std::size_t cutoff = 2;
  std::size_t sector = 1;
};

// "-2i·ZZZ" for a single-term bracket, "0" when it vanishes.
std::string compact(const PauliSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& t : s.terms()) {
    if (!out.empty()) out += " + ";
    out += text::coefficient(t.coefficient) + "·" + format(t.word);
  }
  return out;
}

std::string fixed(double v) {
  if (std::abs(v) < 5e-11) v = 0.0;
  std::ostringstream s;
  s << std::fixed << std::setprecision(10) << v;
  return s.str();
}

json relations_json(const std::vector<RelationResidual>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back({{"relation", r.relation}, {"residual", r.residual}, {"scope", r.scope}});
  return out;
}

void relations_text(std::ostream& out, const std::vector<RelationResidual>& rs) {
  for (const auto& r : rs) out << "  " << r.relation << "  residual " << text::real(r.residual) << "  (" << r.scope << ")\n";
}

int cmd_mul(const Options& o, std::ostream& out) {
  const PauliString a = parse(o.a), b = parse(o.b);
  const PauliString ab = multiply(a, b);
  if (o.json) {
    json j = {{"a", format(a)}, {"b", format(b)}, {"product", format(ab)}, {"product_json", to_json(ab)}};
    if (o.dump) j["dump"] = dump(to_matrix(ab, dense_cap_from_env()));
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << format(a) << " * " << format(b) << " = " << format(ab) << '\n';
  if (o.dump) out << dump(to_matrix(ab, dense_cap_from_env()));
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const PauliString a = parse(o.a), b = parse(o.b);
  const bool comm = commutes(a, b);
  const PauliSum c = commutator(a, b), ac = anticommutator(a, b);
  const bool criterion = coincidence_criterion(a, b);
  if (o.json) {
    json j = {{"a", format(a)},
              {"b", format(b)},
              {"relation", comm ? "commute" : "anticommute"},
              {"commutator", to_json(c)},
              {"anticommutator", to_json(ac)}};
    if (o.coincidence) {
      j["coincidence_criterion"] = {{"relation", criterion ? "commute" : "anticommute"},
                                    {"coincidences", coincidences(a, b)},
                                    {"agrees", criterion == comm}};
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (comm) out << "commute; {A,B} = " << compact(ac) << '\n';
  else out << "anticommute; [A,B] = " << compact(c) << '\n';
  if (o.coincidence) {
    out << "coincidence criterion: " << (criterion ? "commute" : "anticommute") << " ("
        << coincidences(a, b) << " coincidences, n = " << a.size() << ")\n";
    if (criterion != comm) {
      out << "warning: coincidence criterion disagrees with the symplectic rule "
             "(identity letter paired with a non-identity letter)\n";
    }
  }
  return kExitOk;
}

int cmd_group(const Options& o, std::ostream& out) {
  const auto elements = enumerate_group(o.n);
  if (o.count) {
    if (o.json) out << json{{"n", o.n}, {"order", elements.size()}}.dump(2) << '\n';
    else out << elements.size() << '\n';
    return kExitOk;
  }
  if (o.closure) {
    const std::set<PauliString> set(elements.begin(), elements.end());
    std::size_t products = 0;
    bool closed = true;
    for (const auto& x : elements)
      for (const auto& y : elements) {
        ++products;
        closed = closed && set.contains(multiply(x, y));
      }
    const PauliString id(o.n);
    bool inverses = set.contains(id);
    for (const auto& x : elements) {
      // (i^q W)^{-1} = i^{-q} W since W^2 = I
      const PauliString inv = x.with_phase(Phase(-x.phase().exponent()));
      inverses = inverses && set.contains(inv) && multiply(x, inv) == id;
    }
    if (o.json) {
      out << json{{"n", o.n}, {"order", elements.size()}, {"products", products},
                  {"closed", closed}, {"inverses", inverses}}.dump(2)
          << '\n';
    } else {
      out << "order " << elements.size() << ", " << products << " products checked, "
          << (closed ? "closed" : "NOT closed") << ", identity and inverses "
          << (inverses ? "present" : "MISSING") << '\n';
    }
    return closed && inverses ? kExitOk : kExitContract;
  }
  if (o.json) {
    json list = json::array();
    for (const auto& e : elements) list.push_back(format(e));
    out << json{{"n", o.n}, {"order", elements.size()}, {"elements", list}}.dump(2) << '\n';
  } else {
    for (const auto& e : elements) out << format(e) << '\n';
  }
  return kExitOk;
}

PauliString random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const PauliString p = random_string(n, false, rng);
  return p.with_phase(Phase(p.phase().exponent() & 2));
}

int cmd_exp_check(const Options& o, std::ostream& out) {
  const std::size_t cap = dense_cap_from_env();
  if (o.random_pairs > 0) {
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    std::size_t commuting = 0;
    for (std::size_t k = 0; k < o.random_pairs; ++k) {
      const std::size_t n = 1 + rng() % o.max_n;
      const PauliString a = random_hermitian(n, rng), b = random_hermitian(n, rng);
      const auto r = verify_conjugation(a, b, cap);
      if (r.relation == Relation::commute) ++commuting;
      worst = std::max(worst, r.max_residual());
    }
    const bool ok = worst < 1e-10;
    if (o.json) {
      out << json{{"pairs", o.random_pairs}, {"seed", o.seed}, {"commuting", commuting},
                  {"max_residual", worst}, {"passed", ok}}.dump(2)
          << '\n';
    } else {
      out << o.random_pairs << " random pairs (seed " << o.seed << ", " << commuting
          << " commuting): max residual " << text::real(worst) << ", " << (ok ? "pass" : "FAIL")
          << '\n';
    }
    return ok ? kExitOk : kExitContract;
  }

  const PauliString a = parse(o.a), b = parse(o.b);
  const auto r = verify_conjugation(a, b, cap);
  const bool ok = r.passed();
  if (o.json) {
    json j = {{"a", format(a)}, {"b", format(b)},
              {"relation", r.relation == Relation::commute ? "commute" : "anticommute"},
              {"passed", ok}};
    if (r.identity_residual) j["residual_identity"] = *r.identity_residual;
    if (r.left_residual) j["residual_left"] = *r.left_residual;
    if (r.right_residual) j["residual_right"] = *r.right_residual;
    out << j.dump(2) << '\n';
  } else {
    out << "L = e^A B e^-A with A = " << format(a) << ", B = " << format(b) << '\n';
    if (r.relation == Relation::commute) {
      out << "commute: ||L - B||_F = " << text::real(*r.identity_residual) << '\n';
    } else {
      out << "anticommute: ||L - e^{2A} B||_F = " << text::real(*r.left_residual) << '\n';
      out << "             ||L - B e^{-2A}||_F = " << text::real(*r.right_residual) << '\n';
    }
    out << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitContract;
}

int cmd_ham(const Options& o, std::ostream& out) {
  const std::size_t cap = dense_cap_from_env();
  const bool xxz = o.model == "xxz";
  const std::size_t n = o.n ? o.n : (xxz ? 6 : 3);
  PauliSum h(1);
  BoundaryCondition bc = BoundaryCondition::open;
  if (xxz) {
    bc = boundary_from_string(o.bc);
    h = build_xxz(n, o.j12, o.j3, bc);
  } else if (o.model == "H" || o.model == "K") {
    h = build_heisenberg12(n, o.model == "H" ? ThreeSiteVariant::H : ThreeSiteVariant::K);
  } else {
    throw ContractError("unknown model '" + o.model + "' (expected xxz, H or K)");
  }
  if (n > cap) throw SizeError("n = " + std::to_string(n) + " exceeds the dense cap " + std::to_string(cap));

  const PauliString s = o.symmetry.empty() ? PauliString::from_letters(std::vector<Letter>(n, Letter::Z))
                                           : parse(o.symmetry);
  if (s.size() != n) throw DimensionError("symmetry string has " + std::to_string(s.size()) + " sites, model has " + std::to_string(n));
  const SymmetryKind kind = is_symmetry(h, s, cap);
  const SectorReport report = sector_decompose(h, s, cap);

  double deviation = 0.0;
  bool match = true;
  if (o.verify) {
    const auto full = eig_hermitian(to_matrix(h, cap)).eigenvalues;
    const auto merged = report.spectrum.sorted_eigenvalues();
    match = full.size() == merged.size();
    for (std::size_t k = 0; match && k < full.size(); ++k) deviation = std::max(deviation, std::abs(full[k] - merged[k]));
    match = match && deviation < 1e-9;
  }

  auto sector_values = [&](int label) {
    std::vector<double> v;
    for (std::size_t k = 0; k < report.spectrum.eigenvalues.size(); ++k)
      if (report.spectrum.sector_labels[k] == label) v.push_back(report.spectrum.eigenvalues[k]);
    return v;
  };

  if (o.json) {
    json j = {{"model", o.model}, {"n", n}, {"symmetry", format(s)}, {"symmetry_kind", to_string(kind)}};
    if (xxz) {
      j["bc"] = to_string(bc);
      j["couplings"] = {{"j12", o.j12}, {"j3", o.j3}};
    } else {
      j["bc"] = nullptr;
      j["couplings"] = nullptr;
    }
    j["sectors"] = json::array({{{"label", "+1"}, {"dim", report.plus_dim}, {"eigenvalues", sector_values(1)}},
                                {{"label", "-1"}, {"dim", report.minus_dim}, {"eigenvalues", sector_values(-1)}}});
    j["residuals"] = {{"eigen", report.spectrum.residual},
                      {"off_block", report.off_block_norm},
                      {"basis", report.basis_residual}};
    if (o.verify) j["residuals"]["spectrum_match"] = deviation;
    if (o.verify) j["verified"] = match;
    out << j.dump(2) << '\n';
  } else {
    out << "model " << o.model << ", n = " << n;
    if (xxz) out << ", bc = " << to_string(bc) << ", j12 = " << text::real(o.j12) << ", j3 = " << text::real(o.j3);
    out << '\n' << "symmetry " << format(s) << " (" << to_string(kind) << ")\n";
    for (int label : {1, -1}) {
      const auto values = sector_values(label);
      out << "sector " << (label > 0 ? "+1" : "-1") << " (dim " << values.size() << "):";
      for (double v : values) out << ' ' << fixed(v);
      out << '\n';
    }
    out << "residuals: eigen " << text::real(report.spectrum.residual) << ", off-block "
        << text::real(report.off_block_norm) << ", basis " << text::real(report.basis_residual) << '\n';
    if (o.verify) {
      out << "verify: sector union " << (match ? "matches" : "DOES NOT match")
          << " full spectrum (max deviation " << text::real(deviation) << ")\n";
    }
  }
  return match ? kExitOk : kExitContract;
}

inline constexpr std::size_t kMaxMubFamily = 8;

int cmd_mub(const Options& o, std::ostream& out) {
  if (o.family == 0) throw ContractError("--family must be at least 1");
  if (o.family > kMaxMubFamily) throw SizeError("--family capped at " + std::to_string(kMaxMubFamily));
  const std::vector<Basis> bases = {tensor_basis(pauli_eigenbasis(Letter::X), o.family),
                                    tensor_basis(pauli_eigenbasis(Letter::Y), o.family),
                                    tensor_basis(pauli_eigenbasis(Letter::Z), o.family)};
  const auto r = mutually_unbiased_family(bases, kOrthonormalTolerance);
  const std::size_t d = bases.front().dim();
  if (!o.table.empty()) {
    std::ofstream f(o.table);
    if (!f) throw ContractError("cannot open '" + o.table + "' for writing");
    f << overlap_table_csv(bases);
  }
  if (o.json) {
    out << json{{"m", o.family}, {"d", d}, {"target_overlap", 1.0 / std::sqrt(static_cast<double>(d))},
                {"mutually_unbiased", r.mutually_unbiased}, {"max_deviation", r.worst_deviation},
                {"worst_pair", {r.worst_pair.first, r.worst_pair.second}}}.dump(2)
        << '\n';
  } else {
    out << "bases B1 (X), B2 (Y), B3 (Z) lifted " << o.family << "-fold in C^" << d << ": "
        << (r.mutually_unbiased ? "mutually unbiased" : "NOT mutually unbiased") << ", max deviation "
        << text::real(r.worst_deviation) << " from 1/sqrt(" << d << ")\n";
  }
  return r.mutually_unbiased ? kExitOk : kExitContract;
}

int cmd_fermi(const Options& o, std::ostream& out) {
  const FermionRegister reg = jordan_wigner(o.modes);
  std::vector<RelationResidual> rels = car_relations(reg);
  if (o.modes == 2) {
    const auto su2 = fermi_su2(reg);
    rels.insert(rels.end(), su2.begin(), su2.end());
  }
  const bool ok = std::all_of(rels.begin(), rels.end(), [](const auto& r) { return r.residual < kFermionTolerance; });
  if (o.json) {
    out << json{{"modes", o.modes}, {"relations", relations_json(rels)}, {"passed", ok}}.dump(2) << '\n';
  } else {
    out << "Jordan-Wigner register, " << o.modes << " modes (dim " << (std::size_t{1} << o.modes) << ")\n";
    relations_text(out, rels);
    out << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitContract;
}

int cmd_bose(const Options& o, std::ostream& out) {
  const BosonRegister reg = bose_register(2, o.cutoff);
  const BoseSu2Report r = bose_su2_sector_check(reg, o.sector);
  const bool ok = r.passed();
  if (o.json) {
    out << json{{"cutoff", o.cutoff},
                {"sector", o.sector},
                {"sector_dim", r.sector_dim},
                {"relations", relations_json(r.sector)},
                {"full", relations_json(r.full)},
                {"conservation", relations_json(r.conservation)},
                {"anticommutator", relations_json({r.anticommutator})},
                {"passed", ok}}.dump(2)
        << '\n';
  } else {
    out << "two-mode bosons, cutoff " << o.cutoff << ", sector n1 + n2 = " << o.sector << " (dim " << r.sector_dim << ")\n";
    out << "sector relations:\n";
    relations_text(out, r.sector);
    out << "number conservation:\n";
    relations_text(out, r.conservation);
    out << "full truncated space (informational):\n";
    relations_text(out, r.full);
    relations_text(out, {r.anticommutator});
    out << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitContract;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pauli group algebra toolkit", "pauli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "emit one JSON document");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  auto* mul = app.add_subcommand("mul", "product of two Pauli strings");
  mul->add_option("A", o.a)->required();
  mul->add_option("B", o.b)->required();
  mul->add_flag("--dump", o.dump, "print the product matrix");

  auto* classify = app.add_subcommand("classify", "commute or anticommute, with the nonvanishing bracket");
  classify->add_option("A", o.a)->required();
  classify->add_option("B", o.b)->required();
  classify->add_flag("--coincidence-criterion,--paper-criterion", o.coincidence,
                     "also evaluate the coincidence-parity criterion");

  auto* group = app.add_subcommand("group", "enumerate the n-qubit Pauli group");
  group->add_option("--n", o.n)->required();
  auto* count = group->add_flag("--count", o.count, "print the group order");
  group->add_flag("--closure", o.closure, "check closure exhaustively")->excludes(count);

  auto* exp = app.add_subcommand("exp-check", "verify e^A B e^-A identities");
  exp->add_option("A", o.a);
  exp->add_option("B", o.b);
  exp->add_option("--random", o.random_pairs, "check this many random hermitian pairs instead");
  exp->add_option("--max-n", o.max_n, "largest site count for --random")->check(CLI::Range(1, 12));

  auto* ham = app.add_subcommand("ham", "spin Hamiltonian sector analysis");
  ham->add_option("--model", o.model, "xxz, H or K")->capture_default_str();
  ham->add_option("--n", o.n, "site count (default 6 for xxz, 3 for H and K)");
  ham->add_option("--j12", o.j12)->capture_default_str();
  ham->add_option("--j3", o.j3)->capture_default_str();
  ham->add_option("--bc", o.bc, "open or periodic")->capture_default_str();
  ham->add_option("--symmetry", o.symmetry, "Pauli string symmetry (default Z on every site)");
  ham->add_flag("--verify", o.verify, "compare the sector union with the full spectrum");

  auto* mub = app.add_subcommand("mub", "mutually unbiased Pauli eigenbases");
  mub->add_option("--family", o.family, "tensor power m")->required();
  mub->add_option("--table", o.table, "write overlap magnitudes as CSV");

  auto* fermi = app.add_subcommand("fermi", "Jordan-Wigner fermions and their su(2) bilinears");
  fermi->add_option("--modes", o.modes)->capture_default_str();

  auto* bose = app.add_subcommand("bose", "Schwinger bosons on a truncated Fock space");
  bose->add_option("--cutoff", o.cutoff)->required();
  bose->add_option("--sector", o.sector)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitContract;
  }

  try {
    if (*mul) return cmd_mul(o, out);
    if (*classify) return cmd_classify(o, out);
    if (*group) return cmd_group(o, out);
    if (*exp) {
      if (o.random_pairs == 0 && (o.a.empty() || o.b.empty())) {
        throw ContractError("exp-check needs A and B, or --random K");
      }
      return cmd_exp_check(o, out);
    }
    if (*ham) return cmd_ham(o, out);
    if (*mub) return cmd_mub(o, out);
    if (*fermi) return cmd_fermi(o, out);
    if (*bose) return cmd_bose(o, out);
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
    return kExitSize;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitContract;
  }
  return kExitContract;
}

}  // namespace pauli::cli
