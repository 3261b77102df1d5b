#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace dykonem {

// Entity kinds, ordered; the order defines canonical endpoint order for
// undirected triples.
enum class EntityKind : uint8_t { patient = 0, doctor = 1, hospital = 2, disease = 3 };

enum class RelationKind : uint8_t {
  doc_hosp = 0,
  doc_dis = 1,
  pat_dis = 2,
  pat_hosp = 3,
  pat_doc = 4,
};

enum class View : uint8_t { online = 0, offline = 1 };

inline constexpr int kNumEntityKinds = 4;
inline constexpr int kNumRelations = 5;

const char* to_string(EntityKind k);
const char* to_string(RelationKind r);
const char* to_string(View v);

bool parse_entity_kind(std::string_view s, EntityKind& out);
bool parse_relation(std::string_view s, RelationKind& out);
bool parse_view(std::string_view s, View& out);

// Endpoint kinds a relation connects, in canonical (EntityKind-ascending) order.
std::pair<EntityKind, EntityKind> relation_endpoints(RelationKind r);

struct EntityRef {
  EntityKind kind;
  std::string id;

  friend bool operator==(const EntityRef& a, const EntityRef& b) {
    return a.kind == b.kind && a.id == b.id;
  }
  friend bool operator<(const EntityRef& a, const EntityRef& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.id < b.id;
  }
  std::string str() const { return std::string(to_string(kind)) + ":" + id; }
};

struct Triple {
  EntityRef head;
  RelationKind rel;
  EntityRef tail;
  int64_t timestamp = 0;
  View view = View::online;

  friend bool operator==(const Triple& a, const Triple& b) {
    return a.rel == b.rel && a.timestamp == b.timestamp && a.view == b.view &&
           a.head == b.head && a.tail == b.tail;
  }
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.head, a.rel, a.tail, a.timestamp) <
           std::tie(b.head, b.rel, b.tail, b.timestamp);
  }
};

// Error taxonomy: config/usage problems vs malformed input vs schema violations.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dykonem
