#include "chainsub/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chainsub/errors.hpp"
#include "chainsub/json_io.hpp"
#include "chainsub/oracle.hpp"
#include "chainsub/verify.hpp"

namespace chainsub::cli {

namespace {

using io::InputError;
using io::json;

struct Options {
  std::string ring, in, inline_json, out;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 1;
};

json read_input(const Options& o) {
  if (!o.inline_json.empty()) return io::parse(o.inline_json, "--json");
  if (o.in.empty()) return json::object();
  std::ifstream f(o.in);
  if (!f) throw InputError("--in", "cannot open '" + o.in + "'");
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return io::parse(text, "--in");
}

RingPtr read_ring(const Options& o, const json& doc) {
  if (!o.ring.empty()) return make_ring(io::ring_from_json(io::parse(o.ring, "--ring"), "--ring"));
  if (doc.is_object() && doc.contains("ring")) return make_ring(io::ring_from_json(doc["ring"], "ring"));
  return make_ring(RingDescriptor::zmod(2, 7));
}

void require_interval_ring(const RingPtr& r) {
  if (r->length() < 7) throw InputError("ring.n", "interval commands need n >= 7");
}

const json& field_of(const json& doc, const std::string& key) {
  if (!doc.is_object()) throw InputError("input", "expected an object");
  if (!doc.contains(key)) throw InputError(key, "missing");
  return doc[key];
}

SubPair read_object(const json& doc, const RingPtr& ring, const std::string& key = "object") {
  return io::object_from_json(field_of(doc, key), ring, key);
}

/// Frames a bare pair with rank from "m" or from its I-socle.
FramedObject frame_object(const json& doc, const RingPtr& ring) {
  if (doc.is_object() && doc.contains("triple"))
    return Phi_object(ring, io::triple_from_json(doc["triple"], ring->residue_field()));
  const auto pair = read_object(doc, ring);
  try {
    std::size_t m;
    if (doc.contains("m")) {
      if (!doc["m"].is_number_unsigned()) throw InputError("m", "expected a nonnegative integer");
      m = doc["m"].get<std::size_t>();
    } else {
      m = i_socle(pair).rank;
    }
    return check_interval(pair, m);
  } catch (const NotInInterval& e) {
    throw InputError("object", e.what());
  } catch (const DecompositionFailed& e) {
    throw InputError("object", std::string("not in the interval: ") + e.what());
  }
}

json hom_json(const HomGroup& h, const Ring& r) {
  json out = io::to_json(h);
  const auto q = r.residue_field().order();
  out["q"] = q;
  if (h.log_size() * std::log2(static_cast<double>(q)) < 63) {
    std::uint64_t order = 1;
    for (int i = 0; i < h.log_size(); ++i) order *= q;
    out["order"] = order;
  }
  return out;
}

json results_json(const std::vector<verify::Result>& results, bool& ok) {
  json list = json::array();
  ok = true;
  for (const auto& r : results) {
    list.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return {{"passed", ok}, {"results", list}};
}

int log2_floor(std::uint64_t x) {
  int e = -1;
  while (x) x >>= 1, ++e;
  return e;
}

json cmd_build(const json& doc, const RingPtr& ring) {
  SubPair pair = [&] {
    if (doc.is_object() && doc.contains("objects")) {
      const auto& list = doc["objects"];
      if (!list.is_array()) throw InputError("objects", "expected an array");
      std::vector<SubPair> parts;
      for (std::size_t i = 0; i < list.size(); ++i)
        parts.push_back(io::object_from_json(list[i], ring, "objects[" + std::to_string(i) + "]"));
      return direct_sum(parts).pair;
    }
    return read_object(doc, ring);
  }();
  json out = io::to_json(pair);
  out["ring"] = io::to_json(ring->descriptor());
  const auto& parts = pair.M0.partition();
  out["t_annihilates_M0"] = std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
  return out;
}

json cmd_layers(const json& doc, const RingPtr& ring) {
  require_interval_ring(ring);
  const auto pair = read_object(doc, ring);
  const auto lay = layers(pair);
  json list = json::array();
  for (int i = 1; i <= 6; ++i) {
    json rows = json::array();
    for (const auto& row : lay[i].rows()) rows.push_back(io::to_json(*ring, row));
    list.push_back({{"index", i}, {"generators", rows}, {"log_size", lay[i].log_size()}});
  }
  json out{{"layers", list}};
  try {
    out["i_socle_rank"] = i_socle(pair).rank;
  } catch (const DecompositionFailed&) {
    out["i_socle_rank"] = nullptr;
  }
  return out;
}

json cmd_phi_apply(const json& doc, const RingPtr& ring) {
  require_interval_ring(ring);
  const auto& k = ring->residue_field();
  if (doc.is_object() && doc.contains("g")) {
    const auto source = Phi_object(ring, io::triple_from_json(field_of(doc, "source"), k, "source"));
    const auto target = Phi_object(ring, io::triple_from_json(field_of(doc, "target"), k, "target"));
    const auto g = io::matrix_from_json(doc["g"], k, source.m, "g");
    if (g.rows() != target.m) throw InputError("g", "expected " + std::to_string(target.m) + " rows");
    try {
      const auto f = Phi_morphism(g, source, target);
      return {{"source", io::to_json(source)}, {"target", io::to_json(target)}, {"morphism", io::to_json(f.f0())}};
    } catch (const ConstraintViolated& e) {
      throw InputError("g", e.what());
    }
  }
  return io::to_json(Phi_object(ring, io::triple_from_json(field_of(doc, "triple"), k)));
}

json cmd_g_embed(const json& doc, const Options& o) {
  RingPtr ring;
  if (!o.ring.empty() || doc.contains("ring")) {
    ring = read_ring(o, doc);
  } else {
    const bool has_p = doc.contains("p"), has_q = doc.contains("q");
    if (has_p == has_q) throw InputError("p", "give exactly one of p or q");
    const auto& pj = has_p ? doc["p"] : doc["q"];
    const std::string pname = has_p ? "p" : "q";
    if (!pj.is_number_unsigned()) throw InputError(pname, "expected a positive integer");
    const auto& nj = field_of(doc, "n");
    if (!nj.is_number_unsigned()) throw InputError("n", "expected a positive integer");
    const auto p = pj.get<std::uint64_t>();
    const auto n = nj.get<int>();
    try {
      ring = make_ring(has_p ? RingDescriptor::zmod(p, n) : RingDescriptor::truncpoly(p, n));
    } catch (const Error& e) {
      throw InputError(pname, e.what());
    }
  }
  require_interval_ring(ring);
  const auto v = io::two_matrix_from_json(doc, ring->residue_field(), "input");
  const auto emb = G_embed(v);
  const auto obj = Phi_object(ring, emb.triple);
  json framed = io::to_json(obj);
  framed["M1_partition"] = decompose(obj.realized.M1).module.partition();
  return {{"ring", io::to_json(ring->descriptor())},
          {"rep", io::to_json(emb.rep)},
          {"triple", io::to_json(emb.triple)},
          {"pair", framed},
          {"end_quotient", io::to_json(EndQuotient(obj))},
          {"commutant_dim", commutant_oracle(v, v).size()}};
}

json cmd_hom(const json& doc, const RingPtr& ring) {
  const auto m = read_object(doc, ring, "source"), n = read_object(doc, ring, "target");
  const bool through = doc.contains("through_I") && doc["through_I"].get<bool>();
  if (through) require_interval_ring(ring);
  return hom_json(through ? hom_through_I(m, n) : hom_pairs(m, n), *ring);
}

/// Exhaustive check of hom_pairs on one instance, or the randomized oracle set.
json cmd_oracle(const json& doc, const RingPtr& ring, const Options& o, bool& ok) {
  if (ring->residue_field().order() != 2) throw InputError("ring", "oracle mode runs with residue field F_2");
  const int max_log = log2_floor(o.budget);
  if (!doc.contains("source")) {
    const auto s = o.seed;
    return results_json({verify::howell_oracle(s, 250), verify::solve_oracle(s + 1, 250),
                         verify::lattice_oracle(s + 2, 250), verify::quotient_oracle(s + 3, 250),
                         verify::hom_pairs_oracle(s + 4, 20, std::min(max_log, 14))},
                        ok);
  }
  const auto m = read_object(doc, ring, "source"), n = read_object(doc, ring, "target");
  if (m.M0.log_size() > max_log) throw InputError("source", "|M0| exceeds the budget");
  if (n.M0.log_size() > max_log) throw InputError("target", "|M0| exceeds the budget");
  const HomCoordinates hc(m.M0, n.M0);
  if (hc.space.log_size() > max_log) throw InputError("source", "|Hom(M0, N0)| exceeds the budget");
  const auto group = hom_pairs(m, n);
  oracle::VecSet n1 = oracle::span(*ring, n.M1.rows(), n.M0.partition());
  std::uint64_t count = 0, disagreements = 0;
  oracle::for_each_vector(*ring, hc.exps(), [&](const RingVector& c) {
    const auto f = hc.from_coords(c);
    bool in = true;
    for (const auto& g : m.M1.rows()) in = in && n1.count(f.apply(g));
    count += in;
    disagreements += group.contains(f) != in;
  });
  ok = disagreements == 0 && count == (std::uint64_t{1} << group.log_size());
  return {{"passed", ok},
          {"enumerated", std::uint64_t{1} << hc.space.log_size()},
          {"hom_order_enumerated", count},
          {"hom_log_size", group.log_size()},
          {"membership_disagreements", disagreements}};
}

void emit(const json& j, const Options& o, std::ostream& out) {
  const auto text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("--out", "cannot write '" + o.out + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Submodule categories over truncated chain rings"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"build", "construct a pair (named, explicit, or a direct sum)"},
      {"layers", "the layer filtration L1..L6 and I-socle rank"},
      {"f-apply", "apply F to an object in the interval"},
      {"phi-apply", "apply Phi to a triple or a triple morphism"},
      {"g-embed", "embed a two-matrix module and certify its endomorphism quotient"},
      {"hom", "Hom group of pairs, or the maps factoring through I"},
      {"end-quotient", "End(M)/End(M)_I with structure constants"},
      {"verify", "run the invariant corpus"},
      {"oracle", "exhaustive cross-checks at p = 2 within a size budget"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", o.ring, "ring descriptor as JSON");
    sub->add_option("--in", o.in, "input JSON file");
    sub->add_option("--json", o.inline_json, "inline input JSON");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--budget", o.budget, "oracle size budget on |M0| and |Hom|");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : InputFailure;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    const json doc = read_input(o);
    bool ok = true;
    json result;
    if (cmd == "g-embed") {
      result = cmd_g_embed(doc, o);
    } else {
      const auto ring = read_ring(o, doc);
      if (cmd == "build") {
        result = cmd_build(doc, ring);
      } else if (cmd == "layers") {
        result = cmd_layers(doc, ring);
      } else if (cmd == "f-apply") {
        require_interval_ring(ring);
        result = io::to_json(F_object(frame_object(doc, ring)));
      } else if (cmd == "phi-apply") {
        result = cmd_phi_apply(doc, ring);
      } else if (cmd == "hom") {
        result = cmd_hom(doc, ring);
      } else if (cmd == "end-quotient") {
        require_interval_ring(ring);
        result = io::to_json(EndQuotient(frame_object(doc, ring)));
      } else if (cmd == "verify") {
        result = results_json(verify::run_corpus(o.seed), ok);
      } else {
        result = cmd_oracle(doc, ring, o, ok);
      }
    }
    emit(result, o, out);
    return ok ? Success : VerificationFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return InputFailure;
  } catch (const json::exception& e) {
    err << "error: field 'input': " << e.what() << "\n";
    return InputFailure;
  } catch (const InvalidArgument& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return InputFailure;
  } catch (const NotInInterval& e) {
    err << "error: field 'object': " << e.what() << "\n";
    return InputFailure;
  } catch (const NotKAlgebra& e) {
    err << "error: " << e.what() << "\n";
    return VerificationFailure;
  } catch (const Error& e) {
    err << "error: internal inconsistency: " << e.what() << "\n";
    return VerificationFailure;
  }
}

}  // namespace chainsub::cli
