#include "cochain/commands.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "cochain/cone.hpp"
#include "json_codec.hpp"

namespace cochain {

namespace {

using detail::Json;

constexpr int kExitInternalFault = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

CommandOutcome report(Json body, bool verdict = true) {
  return {verdict ? kExitTrue : kExitFalse, body.dump(2) + "\n", {}};
}

CommandOutcome constructed(const Session& extended) { return {kExitTrue, emit_session(extended), {}}; }

void expect_args(const std::vector<std::string>& args, std::size_t count, const char* usage) {
  if (args.size() != count + 1) throw UsageError(std::string("usage: ") + usage);
}

int parse_int(const std::string& text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  return value;
}

Json make_report(const char* command) {
  Json out = Json::object();
  out["command"] = command;
  return out;
}

CommandOutcome cmd_validate(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 0, "validate");
  Json out = make_report("validate");
  out["valid"] = true;
  out["field"] = s.field().name();
  out["objects"] = s.objects().size();
  out["maps"] = s.maps().size();
  out["homotopies"] = s.homotopies().size();
  out["roofs"] = s.roofs().size();
  return report(std::move(out));
}

CommandOutcome cmd_cohomology(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 1, "cohomology <object>");
  const CochainComplex& c = s.object(args[1]);
  Json degrees = Json::array();
  for (int i = c.lo(); i <= c.hi(); ++i) {
    const CohomologySpace h = cohomology(c, i);
    Json entry = Json::object();
    entry["degree"] = i;
    entry["dim"] = h.dim;
    entry["representatives"] = detail::matrix_to_json(transpose(h.representatives()));
    degrees.push_back(std::move(entry));
  }
  Json out = make_report("cohomology");
  out["object"] = args[1];
  out["degrees"] = std::move(degrees);
  return report(std::move(out));
}

CommandOutcome cmd_shift(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 2, "shift <object> <n>");
  const int n = parse_int(args[2]);
  Session out = s;
  const CochainComplex shifted = shift(s.object(args[1]), n);
  out.add_object(out.objects().fresh_name(args[1] + "_shift" + std::to_string(n)), shifted);
  return constructed(out);
}

CommandOutcome cmd_cone(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 1, "cone <map>");
  const std::string& name = args[1];
  const MapEntry& f = s.map(name);
  const MappingCone mc = mapping_cone(f.map);
  Session out = s;
  const std::string cone_name = out.objects().fresh_name("cone_" + name);
  out.add_object(cone_name, mc.complex);
  const std::string shifted = out.intern_object(f.from + "_shift1", mc.projection.target());
  out.add_map(out.maps().fresh_name("cone_" + name + "_incl"), f.to, cone_name, mc.inclusion);
  out.add_map(out.maps().fresh_name("cone_" + name + "_proj"), cone_name, shifted, mc.projection);
  return constructed(out);
}

CommandOutcome cmd_les(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 1, "les <map>");
  const Triangle t = cone_triangle(s.map(args[1]).map);
  const bool exact = check_les_exact(t);
  Json out = make_report("les");
  out["map"] = args[1];
  out["exact"] = exact;
  out["rotated_exact"] = check_les_exact(rotate_triangle(t));
  return report(std::move(out), exact);
}

CommandOutcome cmd_homotopic(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 2, "homotopic <map> <map>");
  const MapEntry& f = s.map(args[1]);
  const MapEntry& g = s.map(args[2]);
  const std::optional<Homotopy> k = find_homotopy(f.map, g.map);
  Json out = make_report("homotopic");
  out["from_map"] = args[1];
  out["to_map"] = args[2];
  out["homotopic"] = k.has_value();
  out["witness"] = k ? detail::homotopy_to_json(HomotopyEntry{f.from, f.to, *k}) : Json("none");
  return report(std::move(out), k.has_value());
}

CommandOutcome cmd_qis(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 1, "qis <map>");
  const bool qis = is_quasi_iso(s.map(args[1]).map);
  Json out = make_report("qis");
  out["map"] = args[1];
  out["quasi_isomorphism"] = qis;
  return report(std::move(out), qis);
}

CommandOutcome cmd_flip(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 2, "flip <alpha> <beta>");
  const MapEntry& alpha = s.map(args[1]);
  const MapEntry& beta = s.map(args[2]);
  const FlipResult flip = flip_cospan(Cospan(alpha.map, beta.map));
  Session out = s;
  const std::string k = out.objects().fresh_name("K");
  out.add_object(k, flip.k_complex);
  out.add_map(out.maps().fresh_name("gamma2"), k, alpha.from, flip.gamma2);
  out.add_map(out.maps().fresh_name("gamma1"), k, beta.from, flip.gamma1);
  out.add_homotopy(out.homotopies().fresh_name("h"), k, alpha.to, flip.witness);
  return constructed(out);
}

CommandOutcome cmd_compose(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 2, "compose <roof> <roof>");
  const RoofEntry& r1 = s.roof(args[1]);
  const RoofEntry& r2 = s.roof(args[2]);
  const Roof composite = compose_roofs(r1.roof, r2.roof);
  const std::string base = "compose_" + args[1] + "_" + args[2];
  Session out = s;
  const std::string apex = out.objects().fresh_name(base + "_apex");
  out.add_object(apex, composite.apex());
  const std::string denom = out.maps().fresh_name(base + "_denom");
  out.add_map(denom, apex, s.map(r1.denom).to, composite.denom());
  const std::string numer = out.maps().fresh_name(base + "_numer");
  out.add_map(numer, apex, s.map(r2.numer).to, composite.numer());
  out.add_roof(out.roofs().fresh_name(base), denom, numer);
  return constructed(out);
}

CommandOutcome cmd_roof_equiv(const Session& s, const std::vector<std::string>& args) {
  const char* usage = "roof-equiv <roof> <roof> --witness <apex> <denom> <numer> <up> <down>";
  expect_args(args, 8, usage);
  if (args[3] != "--witness") throw UsageError(std::string("usage: ") + usage);
  const RoofEquivalenceWitness w{s.object(args[4]), s.map(args[5]).map, s.map(args[6]).map,
                                 s.map(args[7]).map, s.map(args[8]).map};
  const bool equivalent = verify_roof_equivalence(s.roof(args[1]).roof, s.roof(args[2]).roof, w);
  Json out = make_report("roof-equiv");
  out["roofs"] = Json::array({args[1], args[2]});
  out["equivalent"] = equivalent;
  return report(std::move(out), equivalent);
}

CommandOutcome cmd_lift(const Session& s, const std::vector<std::string>& args) {
  expect_args(args, 1, "lift <map>");
  const MapEntry& f = s.map(args[1]);
  const Roof lifted = lift_map_to_roof(f.map);
  Session out = s;
  const std::string id = out.maps().fresh_name("id_" + f.from);
  out.add_map(id, f.from, f.from, lifted.denom());
  out.add_roof(out.roofs().fresh_name("lift_" + args[1]), id, args[1]);
  return constructed(out);
}

using Handler = std::function<CommandOutcome(const Session&, const std::vector<std::string>&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"validate", cmd_validate}, {"cohomology", cmd_cohomology}, {"shift", cmd_shift},
      {"cone", cmd_cone},         {"les", cmd_les},               {"homotopic", cmd_homotopic},
      {"qis", cmd_qis},           {"flip", cmd_flip},             {"compose", cmd_compose},
      {"roof-equiv", cmd_roof_equiv}, {"lift", cmd_lift},
  };
  return table;
}

std::string describe(const SessionError& e) {
  std::string out = std::string("error[") + to_string(e.kind()) + "]";
  if (e.line() != 0) out += " line " + std::to_string(e.line()) + ", column " + std::to_string(e.column());
  if (!e.name().empty()) out += " (name '" + e.name() + "')";
  return out + ": " + e.what() + "\n";
}

}  // namespace

CommandOutcome run_command(const Session& session, const std::vector<std::string>& args) {
  if (args.empty()) return {kExitInputError, {}, "error[usage]: no command given\n"};
  const auto it = handlers().find(args[0]);
  if (it == handlers().end()) {
    return {kExitInputError, {}, "error[usage]: unknown command '" + args[0] + "'\n"};
  }
  try {
    return it->second(session, args);
  } catch (const SessionError& e) {
    return {kExitInputError, {}, describe(e)};
  } catch (const UsageError& e) {
    return {kExitInputError, {}, std::string("error[usage]: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kExitInputError, {}, std::string("error[input]: ") + e.what() + "\n"};
  } catch (const std::logic_error& e) {
    return {kExitInternalFault, {}, std::string("internal fault: ") + e.what() + "\n"};
  }
}

CommandOutcome run_cli(std::string_view session_text, const std::vector<std::string>& args) {
  try {
    const Session session = parse_session(session_text);
    return run_command(session, args);
  } catch (const SessionError& e) {
    return {kExitInputError, {}, describe(e)};
  } catch (const Error& e) {
    return {kExitInputError, {}, std::string("error[input]: ") + e.what() + "\n"};
  }
}

}  // namespace cochain
