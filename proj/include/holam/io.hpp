#pragma once

#include <json.hpp>

#include "holam/bridge.hpp"
#include "holam/definability.hpp"
#include "holam/reglang.hpp"

namespace holam {

using Json = nlohmann::json;

// Recognizer: {"type", "q", "accepting": [index...]} when the value space can be
// enumerated; otherwise the accepting set is written symbolically under "set".
Json to_json(const Recognizer& r);
Recognizer recognizer_from_json(const Json& j);

Json to_json(const ValueSet& s);
ValueSet value_set_from_json(const Json& j);

// Language: {"op": "all"|"none", "type"}, {"op": "leaf", "recognizer"},
// {"op": "not", "arg"}, {"op": "and"|"or", "args": [l, r]}.
Json to_json(const Language& l);
Language language_from_json(const Json& j);

// DFA: {"states", "alphabet", "delta", "initial", "accepting"}.
Json to_json(const Dfa& d);
Dfa dfa_from_json(const Json& j);

// Tree automaton: {"states", "alphabet": [{"name", "arity"}], "tables": per letter an
// array nested once per argument, "accepting"}.
Json to_json(const TreeAutomaton& a);
TreeAutomaton tree_automaton_from_json(const Json& j);

Json to_json(const DefSet& d);

Json to_json(const Point& p);
Point point_from_json(const Json& j, const Type& type, unsigned q);

/// Reads a JSON document from a file; BadFormat on I/O or parse failure.
Json read_json_file(const std::string& path);

}  // namespace holam
