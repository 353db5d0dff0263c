#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cochain/chain_map.hpp"
#include "cochain/error.hpp"
#include "cochain/roof.hpp"

namespace cochain {

// Error raised while loading a session file. kind() classifies it; line and
// column are 1-based and 0 when no position is known.
class SessionError : public Error {
 public:
  enum class Kind {
    syntax,
    unknown_reference,
    duplicate_name,
    shape_mismatch,
    not_a_complex,
    not_a_chain_map,
    not_a_quasi_iso,
  };

  SessionError(Kind kind, std::string message, std::string name = {}, std::size_t line = 0,
               std::size_t column = 0);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::string name_;
  std::size_t line_;
  std::size_t column_;
};

const char* to_string(SessionError::Kind kind);

// Insertion-ordered table with unique names.
template <class T>
class NamedTable {
 public:
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  const T* find(std::string_view name) const {
    for (const auto& [key, value] : entries_) {
      if (key == name) return &value;
    }
    return nullptr;
  }

  // Throws SessionError(duplicate_name).
  void add(std::string name, T value) {
    if (contains(name)) {
      throw SessionError(SessionError::Kind::duplicate_name, "duplicate name '" + name + "'", name);
    }
    entries_.emplace_back(std::move(name), std::move(value));
  }

  // A name not yet in the table: base, base_2, base_3, ...
  std::string fresh_name(const std::string& base) const {
    if (!contains(base)) return base;
    for (int n = 2;; ++n) {
      std::string candidate = base + "_" + std::to_string(n);
      if (!contains(candidate)) return candidate;
    }
  }

  const std::vector<std::pair<std::string, T>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, T>> entries_;
};

struct MapEntry {
  std::string from;
  std::string to;
  ChainMap map;
};

struct HomotopyEntry {
  std::string from;
  std::string to;
  Homotopy homotopy;
};

struct RoofEntry {
  std::string denom;
  std::string numer;
  Roof roof;
};

// A field plus named complexes, chain maps, homotopies and roofs.
class Session {
 public:
  explicit Session(Field field) : field_(field) {}

  const Field& field() const { return field_; }

  const NamedTable<CochainComplex>& objects() const { return objects_; }
  const NamedTable<MapEntry>& maps() const { return maps_; }
  const NamedTable<HomotopyEntry>& homotopies() const { return homotopies_; }
  const NamedTable<RoofEntry>& roofs() const { return roofs_; }

  // Lookups throw SessionError(unknown_reference).
  const CochainComplex& object(std::string_view name) const;
  const MapEntry& map(std::string_view name) const;
  const HomotopyEntry& homotopy(std::string_view name) const;
  const RoofEntry& roof(std::string_view name) const;

  // Adders validate eagerly and check that referenced names exist and
  // match the value's complexes.
  void add_object(std::string name, CochainComplex c);
  void add_map(std::string name, std::string from, std::string to, ChainMap f);
  void add_homotopy(std::string name, std::string from, std::string to, Homotopy k);
  void add_roof(std::string name, std::string denom, std::string numer);

  // Returns the name under which c is stored: an existing object equal to
  // c if there is one, otherwise a fresh name derived from base.
  std::string intern_object(const std::string& base, const CochainComplex& c);

 private:
  Field field_;
  NamedTable<CochainComplex> objects_;
  NamedTable<MapEntry> maps_;
  NamedTable<HomotopyEntry> homotopies_;
  NamedTable<RoofEntry> roofs_;
};

// Parses and fully validates a session document:
//
//   {
//     "field": "F5",                      // or "Q", or the prime as a number
//     "objects": {"A": {"dims": {"0": 1, "1": 1}, "diff": {"0": [[1]]}}},
//     "maps": {"f": {"from": "A", "to": "A", "components": {"0": [[1]]}}},
//     "homotopies": {"k": {"from": "A", "to": "A", "components": {"1": [[4]]}}},
//     "roofs": {"r": {"denom": "f", "numer": "f"}}
//   }
//
// Degrees are decimal strings; omitted degrees are zero. The complex window
// runs from the smallest to the largest declared dims key. Scalars are
// integers or strings ("-3", "2/7"); prime-field values are reduced mod p.
Session parse_session(std::string_view text);

// Canonical text: fixed key order, ascending degrees, declaration order for
// names, zero dimensions and zero matrices omitted. Re-parsing the output
// and emitting again reproduces it byte for byte.
std::string emit_session(const Session& session);

}  // namespace cochain
