#include "spechtlab/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "spechtlab/abacus.hpp"
#include "spechtlab/error.hpp"
#include "spechtlab/jm.hpp"
#include "spechtlab/json_io.hpp"
#include "spechtlab/labels.hpp"
#include "spechtlab/mullineux.hpp"
#include "spechtlab/padic.hpp"
#include "spechtlab/specht.hpp"
#include "spechtlab/tableaux.hpp"

namespace spechtlab {

namespace {

std::string human_value(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    if (v.empty()) return "∅";
    const bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); });
    std::string out = flat ? "(" : "[";
    bool first = true;
    for (const auto& e : v) {
      out += (first ? "" : flat ? "," : ", ") + human_value(e);
      first = false;
    }
    return out + (flat ? ")" : "]");
  }
  if (v.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, e] : v.items()) {
      out += (first ? "" : ", ") + k + ": " + human_value(e);
      first = false;
    }
    return out + "}";
  }
  return v.dump();
}

void emit(std::ostream& out, json j, bool human) {
  if (human) {
    for (const auto& [k, v] : j.items()) out << k << ": " << human_value(v) << '\n';
    return;
  }
  json wrapped{{"schema", kSchemaVersion}};
  for (const auto& [k, v] : j.items()) wrapped[k] = v;
  out << wrapped.dump() << '\n';
}

/// Label given either as --lambda/--mu or as a JSON object via --label.
struct LabelInput {
  std::string lambda;
  std::string mu;
  std::string label;

  void attach(CLI::App* sub) {
    sub->add_option("--lambda", lambda, "λ of the label (λ|pμ)");
    sub->add_option("--mu", mu, "μ of the label, unscaled");
    sub->add_option("--label", label, R"(JSON label {"lambda":[..],"mu":[..],"p":P})");
  }

  SignedLabel get(OddPrime p) const {
    if (!label.empty()) {
      SignedLabel l = parse_label(label, p.value());
      if (l.p != p) throw Error(Errc::InvalidPrime, "--p disagrees with the label's prime");
      return l;
    }
    return {parse_partition(lambda), parse_partition(mu), p};
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of simple Specht modules and signed Young modules", "spechtlab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  bool json_flag = false;
  app.add_flag("--human", human, "Plain-text output");
  app.add_flag("--json", json_flag, "JSON output, one object per line (default)");

  int p_raw = 0;
  std::string part;
  std::function<json()> action;

  auto with_prime = [&](CLI::App* sub) { sub->add_option("--p", p_raw, "Odd prime")->required(); };
  auto with_partition = [&](CLI::App* sub, const char* name = "PARTITION") {
    sub->add_option(name, part, "Partition such as [6,5,5,1,1,1] or 6,5,5,1,1,1")->required();
  };
  auto prime = [&] { return OddPrime(p_raw); };

  int beads = -1;
  auto* core = app.add_subcommand("core", "p-core and p-weight");
  with_prime(core);
  with_partition(core);
  core->add_option("--beads", beads, "Bead count of the display");
  core->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(part);
      return json{{"core", to_json(p_core(lambda, prime()))}, {"weight", p_weight(lambda, prime())}};
    };
  });

  auto* quotient = app.add_subcommand("quotient", "p-quotient read off an abacus display");
  with_prime(quotient);
  with_partition(quotient);
  quotient->add_option("--beads", beads, "Bead count of the display (default: canonical)");
  quotient->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(part);
      const Abacus a = beads < 0 ? from_partition(lambda, prime()) : from_partition(lambda, prime(), beads);
      json q = json::array();
      for (const auto& c : p_quotient(a)) q.push_back(to_json(c));
      return json{{"core", to_json(p_core(lambda, prime()))},
                  {"weight", p_weight(lambda, prime())},
                  {"quotient", q},
                  {"bead_count", a.bead_count()},
                  {"beads", a.beads()}};
    };
  });

  auto* padic = app.add_subcommand("padic", "p-adic expansion into p-restricted terms");
  with_prime(padic);
  with_partition(padic);
  padic->callback([&] {
    action = [&] { return json{{"parts", to_json(expand(parse_partition(part), prime()))}}; };
  });

  std::string side = "restricted";
  auto* mull = app.add_subcommand("mullineux", "Mullineux map");
  with_prime(mull);
  with_partition(mull);
  mull->add_option("--side", side, "restricted (m) or regular (M)")
      ->check(CLI::IsMember({"restricted", "regular"}));
  mull->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(part);
      const Partition image =
          side == "regular" ? mullineux_regular(lambda, prime()) : mullineux_restricted(lambda, prime());
      return json{{"partition", to_json(lambda)}, {"side", side}, {"image", to_json(image)}};
    };
  });

  auto* jm = app.add_subcommand("jm", "JM-partition test with abacus witness");
  with_prime(jm);
  with_partition(jm);
  jm->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(part);
      const JmWitness w = is_jm_abacus(lambda, prime());
      json o{{"partition", to_json(lambda)}, {"is_jm", is_jm_hook(lambda, prime())}, {"abacus_test", w.is_jm}};
      o["i"] = w.i ? json(*w.i) : json(nullptr);
      o["j"] = w.j ? json(*w.j) : json(nullptr);
      o["quotient_i"] = w.is_jm ? to_json(w.quotient_i) : json(nullptr);
      o["quotient_j"] = w.is_jm ? to_json(w.quotient_j) : json(nullptr);
      o["bead_count"] = w.display.bead_count();
      return o;
    };
  });

  auto* phi_cmd = app.add_subcommand("phi", "The map Φ");
  with_prime(phi_cmd);
  with_partition(phi_cmd);
  phi_cmd->callback([&] {
    action = [&] {
      const PartitionPair pp = phi(parse_partition(part), prime());
      return json{{"left", to_json(pp.left)},
                  {"right_times_p", to_json(pp.right)},
                  {"mu", to_json(divide(pp.right, prime().value()))}};
    };
  });

  auto* label = app.add_subcommand("label", "Signed-Young label of a simple Specht module");
  with_prime(label);
  with_partition(label);
  label->callback([&] { action = [&] { return to_json(signed_label(parse_partition(part), prime())); }; });

  auto* rep = app.add_subcommand("report", "Everything known about S^λ");
  with_prime(rep);
  with_partition(rep);
  rep->callback([&] { action = [&] { return to_json(report(parse_partition(part), prime())); }; });

  LabelInput li;
  auto label_command = [&](const char* name, const char* what, std::function<json(const SignedLabel&)> f) {
    auto* sub = app.add_subcommand(name, what);
    with_prime(sub);
    li.attach(sub);
    sub->callback([&, f] { action = [&, f] { return f(li.get(prime())); }; });
  };
  label_command("twist", "Label of Y(λ|pμ) ⊗ sgn",
                [](const SignedLabel& l) { return json{{"input", to_json(l)}, {"twist", to_json(twist(l))}}; });
  label_command("rho", "Young vertex descriptor and normalizer shape", [](const SignedLabel& l) {
    json o = to_json(rho(l));
    o["correspondent"] = to_json(green_correspondent(l));
    return o;
  });
  label_command("complexity", "Complexity of Y(λ|pμ)",
                [](const SignedLabel& l) { return json{{"complexity", complexity(l)}}; });
  label_command("classify", "Projective, periodic or aperiodic", [](const SignedLabel& l) {
    const auto per = period(l);
    return json{{"class", std::string(class_name(classify(l)))},
                {"complexity", complexity(l)},
                {"period", per ? json(*per) : json(nullptr)}};
  });
  label_command("block", "Block core and weight", [](const SignedLabel& l) {
    const BlockData b = block(l);
    return json{{"core", to_json(b.core)}, {"weight", b.weight}};
  });

  auto* res = app.add_subcommand("resolution", "Weight-1 labels and the periodic resolution over a p-core");
  with_prime(res);
  with_partition(res, "CORE");
  res->callback([&] { action = [&] { return to_json(weight1_resolution(parse_partition(part), prime())); }; });

  ChainBound bound;
  auto* chain = app.add_subcommand("chain", "Adjacent JM steps into a Rouquier block");
  with_prime(chain);
  with_partition(chain);
  chain->add_option("--max-length", bound.max_length, "Longest chain searched");
  chain->add_option("--max-states", bound.max_states, "Search state limit");
  chain->callback([&] {
    action = [&] {
      const Partition lambda = parse_partition(part);
      const auto steps = rouquier_chain(lambda, prime(), bound);
      json list = json::array();
      for (const auto& s : steps) list.push_back(to_json(s));
      const Partition last = steps.empty() ? lambda : steps.back().target;
      return json{{"partition", to_json(lambda)},
                  {"weight", p_weight(lambda, prime())},
                  {"length", steps.size()},
                  {"steps", list},
                  {"final", to_json(last)},
                  {"final_core", to_json(p_core(last, prime()))}};
    };
  });

  std::string type;
  bool list_tableaux = false;
  auto* ssyt = app.add_subcommand("ssyt-count", "Semistandard signed tableaux of a given type");
  with_partition(ssyt, "SHAPE");
  ssyt->add_option("--type", type, "Type (α|β), e.g. '(3,3,1|2,2)'")->required();
  ssyt->add_flag("--list", list_tableaux, "Also list the tableaux");
  ssyt->callback([&] {
    action = [&] {
      const Partition shape = parse_partition(part);
      const PartitionPair t = parse_pair(type);
      json o{{"shape", to_json(shape)}, {"type", to_json(t)}};
      if (list_tableaux) {
        const auto all = enumerate_signed(shape, t);
        json arr = json::array();
        for (const auto& tab : all) arr.push_back(to_json(tab));
        o["count"] = all.size();
        o["tableaux"] = arr;
      } else {
        o["count"] = count_signed(shape, t);
      }
      return o;
    };
  });

  std::string gamma, xi, lam;
  auto* lr = app.add_subcommand("lr", "Littlewood–Richardson coefficient c^λ_{γ,ξ}");
  lr->add_option("GAMMA", gamma)->required();
  lr->add_option("XI", xi)->required();
  lr->add_option("LAMBDA", lam)->required();
  lr->callback([&] {
    action = [&] {
      const Partition g = parse_partition(gamma), x = parse_partition(xi), l = parse_partition(lam);
      return json{{"gamma", to_json(g)}, {"xi", to_json(x)}, {"lambda", to_json(l)},
                  {"coefficient", lr_coefficient(g, x, l)}};
    };
  });

  int n = 0;
  auto* enumerate = app.add_subcommand("enumerate-jm", "All JM partitions of n");
  with_prime(enumerate);
  enumerate->add_option("--n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->callback([&] {
    action = [&] {
      json arr = json::array();
      for (const auto& l : jm_partitions_of(n, prime())) arr.push_back(to_json(l));
      return json{{"n", n}, {"p", p_raw}, {"count", arr.size()}, {"partitions", arr}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    emit(out, action(), human);
    return kExitOk;
  } catch (const Error& e) {
    if (human)
      err << "error: " << e.what() << '\n';
    else
      err << json{{"schema", kSchemaVersion}, {"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump()
          << '\n';
    return e.code() == Errc::ChainNotFoundWithinBound ? kExitSearchFailed : kExitInvalidInput;
  }
}

}  // namespace spechtlab
