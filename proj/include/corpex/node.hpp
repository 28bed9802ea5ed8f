#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corpex {

enum class NodeKind { Lemma, Bigram, Initialism };

std::string_view node_kind_name(NodeKind kind) noexcept;
/// Accepts "lemma", "bigram", "initialism"; throws UnknownFormat otherwise.
NodeKind parse_node_kind(std::string_view name);

/// The query anchor of a collocation or frequency analysis.
///
/// Lemma and Bigram forms are lowercased and matched against lemmas;
/// an Initialism form is uppercase and matched case-sensitively against
/// surfaces, so "VR" never picks up a lowercase "vr".
struct NodeSpec {
  NodeKind kind = NodeKind::Lemma;
  std::vector<std::string> forms;
  bool case_sensitive = false;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

NodeSpec make_node(std::string_view spec, NodeKind kind);

/// Printed form: forms joined by a single space.
std::string to_string(const NodeSpec& node);

/// Lowercased forms, used to keep the node's own lemmas out of collocate
/// lists.
std::vector<std::string> node_lemmas(const NodeSpec& node);

}  // namespace corpex
