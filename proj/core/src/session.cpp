#include "cochain/session.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>

#include "json_codec.hpp"

namespace cochain {

using detail::Json;

SessionError::SessionError(Kind kind, std::string message, std::string name, std::size_t line,
                           std::size_t column)
    : Error(std::move(message)), kind_(kind), name_(std::move(name)), line_(line), column_(column) {}

const char* to_string(SessionError::Kind kind) {
  switch (kind) {
    case SessionError::Kind::syntax: return "syntax";
    case SessionError::Kind::unknown_reference: return "unknown-reference";
    case SessionError::Kind::duplicate_name: return "duplicate-name";
    case SessionError::Kind::shape_mismatch: return "shape-mismatch";
    case SessionError::Kind::not_a_complex: return "not-a-complex";
    case SessionError::Kind::not_a_chain_map: return "not-a-chain-map";
    case SessionError::Kind::not_a_quasi_iso: return "not-a-quasi-isomorphism";
  }
  return "unknown";
}

namespace {

template <class T>
const T& lookup(const NamedTable<T>& table, std::string_view name, const char* what) {
  if (const T* value = table.find(name)) return *value;
  throw SessionError(SessionError::Kind::unknown_reference,
                     std::string("unknown ") + what + " '" + std::string(name) + "'", std::string(name));
}

}  // namespace

const CochainComplex& Session::object(std::string_view name) const { return lookup(objects_, name, "object"); }
const MapEntry& Session::map(std::string_view name) const { return lookup(maps_, name, "map"); }
const HomotopyEntry& Session::homotopy(std::string_view name) const {
  return lookup(homotopies_, name, "homotopy");
}
const RoofEntry& Session::roof(std::string_view name) const { return lookup(roofs_, name, "roof"); }

void Session::add_object(std::string name, CochainComplex c) {
  if (!(c.field() == field_)) throw FieldMismatch("object '" + name + "' is over " + c.field().name());
  require_valid(c);
  objects_.add(std::move(name), std::move(c));
}

void Session::add_map(std::string name, std::string from, std::string to, ChainMap f) {
  if (!(f.source() == object(from)) || !(f.target() == object(to))) {
    throw ObjectMismatch("map '" + name + "' does not run from '" + from + "' to '" + to + "'");
  }
  require_valid(f);
  maps_.add(std::move(name), MapEntry{std::move(from), std::move(to), std::move(f)});
}

void Session::add_homotopy(std::string name, std::string from, std::string to, Homotopy k) {
  if (!(k.source() == object(from)) || !(k.target() == object(to))) {
    throw ObjectMismatch("homotopy '" + name + "' does not run from '" + from + "' to '" + to + "'");
  }
  homotopies_.add(std::move(name), HomotopyEntry{std::move(from), std::move(to), std::move(k)});
}

void Session::add_roof(std::string name, std::string denom, std::string numer) {
  Roof roof(map(denom).map, map(numer).map);
  roofs_.add(std::move(name), RoofEntry{std::move(denom), std::move(numer), std::move(roof)});
}

std::string Session::intern_object(const std::string& base, const CochainComplex& c) {
  for (const auto& [name, existing] : objects_.entries()) {
    if (existing == c) return name;
  }
  std::string name = objects_.fresh_name(base);
  add_object(name, c);
  return name;
}

// ---------------------------------------------------------------------------
// Encoding

namespace detail {

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime()) return Json(s.residue());
  const Rational& q = s.rational();
  if (boost::multiprecision::denominator(q) == 1) {
    const BigInt& n = boost::multiprecision::numerator(q);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
      return Json(n.convert_to<std::int64_t>());
    }
  }
  return Json(s.to_string());
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json complex_to_json(const CochainComplex& c) {
  Json dims = Json::object();
  Json diff = Json::object();
  for (int i = c.lo(); i <= c.hi(); ++i) {
    if (c.dim(i) != 0) dims[std::to_string(i)] = c.dim(i);
  }
  for (int i = c.lo(); i < c.hi(); ++i) {
    const Matrix d = c.differential(i);
    if (!d.is_zero()) diff[std::to_string(i)] = matrix_to_json(d);
  }
  Json out = Json::object();
  out["dims"] = std::move(dims);
  out["diff"] = std::move(diff);
  return out;
}

namespace {

template <class Components>
Json components_to_json(int lo, int hi, const Components& component_at) {
  Json comps = Json::object();
  for (int i = lo; i <= hi; ++i) {
    const Matrix m = component_at(i);
    if (!m.is_zero()) comps[std::to_string(i)] = matrix_to_json(m);
  }
  return comps;
}

}  // namespace

Json map_to_json(const MapEntry& entry) {
  Json out = Json::object();
  out["from"] = entry.from;
  out["to"] = entry.to;
  out["components"] = components_to_json(entry.map.lo(), entry.map.hi(),
                                         [&](int i) { return entry.map.component(i); });
  return out;
}

Json homotopy_to_json(const HomotopyEntry& entry) {
  const Homotopy& k = entry.homotopy;
  Json out = Json::object();
  out["from"] = entry.from;
  out["to"] = entry.to;
  out["components"] = components_to_json(std::min(k.source().lo(), k.target().lo() + 1),
                                         std::max(k.source().hi(), k.target().hi() + 1),
                                         [&](int i) { return k.component(i); });
  return out;
}

Json roof_to_json(const RoofEntry& entry) {
  Json out = Json::object();
  out["denom"] = entry.denom;
  out["numer"] = entry.numer;
  return out;
}

}  // namespace detail

namespace {

template <class T, class Encode>
void emit_table(std::string& out, const char* key, const NamedTable<T>& table, Encode encode, bool last) {
  out += "  \"";
  out += key;
  out += "\": {";
  bool first = true;
  for (const auto& [name, value] : table.entries()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    " + Json(name).dump() + ": " + encode(value).dump();
  }
  out += table.empty() ? "}" : "\n  }";
  out += last ? "\n" : ",\n";
}

}  // namespace

std::string emit_session(const Session& session) {
  std::string out = "{\n  \"field\": " + Json(session.field().name()).dump() + ",\n";
  emit_table(out, "objects", session.objects(), detail::complex_to_json, false);
  emit_table(out, "maps", session.maps(), detail::map_to_json, false);
  emit_table(out, "homotopies", session.homotopies(), detail::homotopy_to_json, false);
  emit_table(out, "roofs", session.roofs(), detail::roof_to_json, true);
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Decoding

namespace {

using Kind = SessionError::Kind;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Session read() {
    Json doc;
    try {
      std::vector<std::vector<std::string>> open_objects;
      const Json::parser_callback_t reject_duplicates = [&](int, Json::parse_event_t event, Json& parsed) {
        if (event == Json::parse_event_t::object_start) {
          open_objects.emplace_back();
        } else if (event == Json::parse_event_t::object_end) {
          open_objects.pop_back();
        } else if (event == Json::parse_event_t::key) {
          const std::string key = parsed.get<std::string>();
          auto& seen = open_objects.back();
          if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            duplicate_ = key;
            throw SessionError(Kind::duplicate_name, "duplicate key '" + key + "'", key);
          }
          seen.push_back(key);
        }
        return true;
      };
      doc = Json::parse(text_.begin(), text_.end(), reject_duplicates);
    } catch (const SessionError& e) {
      fail(e.kind(), e.what(), e.name(), text_.rfind(Json(duplicate_).dump()));
    } catch (const Json::parse_error& e) {
      const auto [line, column] = line_column(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw SessionError(Kind::syntax, e.what(), {}, line, column);
    }
    if (!doc.is_object()) fail(Kind::syntax, "session document must be a JSON object", {}, 0);
    for (const auto& [key, value] : doc.items()) {
      if (key != "field" && key != "objects" && key != "maps" && key != "homotopies" && key != "roofs") {
        fail(Kind::syntax, "unknown top-level key '" + key + "'", key, 0);
      }
    }
    if (!doc.contains("field")) fail(Kind::syntax, "missing top-level key 'field'", "field", 0);

    Session session(read_field(doc["field"]));
    field_ = session.field();
    read_section(doc, "objects", [&](const std::string& name, const Json& value) {
      session.add_object(name, read_complex(name, value));
    });
    read_section(doc, "maps", [&](const std::string& name, const Json& value) {
      expect_keys(name, value, {"from", "to", "components"});
      const std::string from = read_name(name, value, "from");
      const std::string to = read_name(name, value, "to");
      const CochainComplex& source = session.object(from);
      const CochainComplex& target = session.object(to);
      session.add_map(name, from, to,
                      ChainMap(source, target, read_components(name, value, source, target, 0)));
    });
    read_section(doc, "homotopies", [&](const std::string& name, const Json& value) {
      expect_keys(name, value, {"from", "to", "components"});
      const std::string from = read_name(name, value, "from");
      const std::string to = read_name(name, value, "to");
      const CochainComplex& source = session.object(from);
      const CochainComplex& target = session.object(to);
      session.add_homotopy(name, from, to,
                           Homotopy(source, target, read_components(name, value, source, target, -1)));
    });
    read_section(doc, "roofs", [&](const std::string& name, const Json& value) {
      expect_keys(name, value, {"denom", "numer"});
      session.add_roof(name, read_name(name, value, "denom"), read_name(name, value, "numer"));
    });
    return session;
  }

 private:
  [[noreturn]] void fail(Kind kind, const std::string& message, const std::string& name,
                         std::size_t offset) const {
    const auto [line, column] = line_column(text_, offset);
    throw SessionError(kind, message, name, line, column);
  }

  // Best-effort source offset of an entity: the first occurrence of its
  // quoted name after the section key.
  std::size_t locate(const std::string& name) const {
    const std::string quoted_section = Json(section_).dump();
    std::size_t from = text_.find(quoted_section);
    if (from == std::string_view::npos) from = 0;
    const std::size_t at = text_.find(Json(name).dump(), from);
    return at == std::string_view::npos ? from : at;
  }

  template <class Fn>
  void read_section(const Json& doc, const char* key, Fn&& fn) {
    if (!doc.contains(key)) return;
    section_ = key;
    const Json& table = doc[key];
    if (!table.is_object()) fail(Kind::syntax, std::string("'") + key + "' must be an object", key, locate(key));
    for (const auto& [name, value] : table.items()) {
      try {
        fn(name, value);
      } catch (const SessionError& e) {
        if (e.line() != 0) throw;
        const std::string& culprit = e.name().empty() ? name : e.name();
        fail(e.kind(), "'" + name + "': " + e.what(), culprit, locate(name));
      } catch (const InvalidComplex& e) {
        fail(Kind::not_a_complex, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const InvalidChainMap& e) {
        fail(Kind::not_a_chain_map, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const NotQuasiIsomorphism& e) {
        fail(Kind::not_a_quasi_iso, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const ShapeMismatch& e) {
        fail(Kind::shape_mismatch, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const FieldMismatch& e) {
        fail(Kind::shape_mismatch, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const ObjectMismatch& e) {
        fail(Kind::shape_mismatch, "'" + name + "': " + e.what(), name, locate(name));
      } catch (const InvalidArgument& e) {
        fail(Kind::syntax, "'" + name + "': " + e.what(), name, locate(name));
      }
    }
  }

  Field read_field(const Json& value) const {
    try {
      if (value.is_number_integer()) return Field::prime(value.get<std::int64_t>());
      if (value.is_string()) return Field::parse(value.get<std::string>());
    } catch (const InvalidArgument& e) {
      fail(Kind::syntax, e.what(), "field", text_.find("\"field\""));
    }
    fail(Kind::syntax, "'field' must be \"Q\", \"F<p>\" or a prime number", "field", text_.find("\"field\""));
  }

  void expect_keys(const std::string& name, const Json& value, std::initializer_list<const char*> keys) const {
    if (!value.is_object()) throw SessionError(Kind::syntax, "entry must be an object", name);
    for (const auto& [key, _] : value.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; })) {
        throw SessionError(Kind::syntax, "unexpected key '" + key + "'", name);
      }
    }
  }

  std::string read_name(const std::string& name, const Json& value, const char* key) const {
    if (!value.contains(key) || !value[key].is_string()) {
      throw SessionError(Kind::syntax, std::string("missing string field '") + key + "'", name);
    }
    return value[key].get<std::string>();
  }

  static int read_degree(const std::string& owner, const std::string& key) {
    int degree = 0;
    const char* begin = key.data();
    const char* end = key.data() + key.size();
    const auto [ptr, ec] = std::from_chars(begin, end, degree);
    if (key.empty() || ec != std::errc{} || ptr != end || (key.size() > 1 && key[0] == '0') ||
        (key.size() > 2 && key[0] == '-' && key[1] == '0') || key == "-0") {
      throw SessionError(Kind::syntax, "degree key '" + key + "' is not a decimal integer", owner);
    }
    return degree;
  }

  Scalar read_scalar(const std::string& owner, const Json& value) const {
    if (value.is_number_integer()) {
      if (value.is_number_unsigned()) return Scalar::from_integer(field_, BigInt(value.get<std::uint64_t>()));
      return Scalar::from_integer(field_, BigInt(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
      try {
        return Scalar::parse(field_, value.get<std::string>());
      } catch (const InvalidArgument& e) {
        throw SessionError(Kind::syntax, e.what(), owner);
      }
    }
    throw SessionError(Kind::syntax, "scalar must be an integer or a string like \"a/b\", got " + value.dump(),
                       owner);
  }

  Matrix read_matrix(const std::string& owner, const Json& value, std::size_t rows, std::size_t cols,
                     const std::string& where) const {
    auto mismatch = [&] {
      return SessionError(Kind::shape_mismatch,
                          where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                              " matrix, got " + value.dump(),
                          owner);
    };
    if (!value.is_array()) throw SessionError(Kind::syntax, where + ": matrix must be an array of rows", owner);
    if (value.size() != rows) throw mismatch();
    Matrix m(field_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      const Json& row = value[r];
      if (!row.is_array()) throw SessionError(Kind::syntax, where + ": matrix rows must be arrays", owner);
      if (row.size() != cols) throw mismatch();
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, read_scalar(owner, row[c]));
    }
    return m;
  }

  CochainComplex read_complex(const std::string& name, const Json& value) const {
    expect_keys(name, value, {"dims", "diff"});
    std::map<int, std::size_t> dims;
    if (value.contains("dims")) {
      if (!value["dims"].is_object()) throw SessionError(Kind::syntax, "'dims' must be an object", name);
      for (const auto& [key, n] : value["dims"].items()) {
        if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<std::int64_t>() >= 0)) {
          throw SessionError(Kind::syntax, "dimension at degree " + key + " must be a nonnegative integer", name);
        }
        dims[read_degree(name, key)] = n.get<std::size_t>();
      }
    }
    const int lo = dims.empty() ? 0 : dims.begin()->first;
    const int hi = dims.empty() ? 0 : dims.rbegin()->first;
    auto dim = [&](int i) { return dims.count(i) ? dims.at(i) : std::size_t{0}; };
    std::map<int, Matrix> diffs;
    if (value.contains("diff")) {
      if (!value["diff"].is_object()) throw SessionError(Kind::syntax, "'diff' must be an object", name);
      for (const auto& [key, m] : value["diff"].items()) {
        const int i = read_degree(name, key);
        diffs.emplace(i, read_matrix(name, m, dim(i + 1), dim(i), "differential at degree " + key));
      }
    }
    return CochainComplex(field_, lo, hi, dims, diffs);
  }

  std::map<int, Matrix> read_components(const std::string& name, const Json& value, const CochainComplex& source,
                                        const CochainComplex& target, int target_offset) const {
    std::map<int, Matrix> comps;
    if (!value.contains("components")) return comps;
    if (!value["components"].is_object()) throw SessionError(Kind::syntax, "'components' must be an object", name);
    for (const auto& [key, m] : value["components"].items()) {
      const int i = read_degree(name, key);
      comps.emplace(i, read_matrix(name, m, target.dim(i + target_offset), source.dim(i),
                                   "component at degree " + key));
    }
    return comps;
  }

  std::string_view text_;
  Field field_ = Field::rationals();
  std::string section_;
  std::string duplicate_;
};

}  // namespace

Session parse_session(std::string_view text) { return Reader(text).read(); }

}  // namespace cochain
