#pragma once

#include <stdexcept>
#include <string>

namespace treeconn {

enum class Violation {
    not_tree_connected,
    not_crossing,
    disconnected,
    not_forest,
    not_subgraph,
    not_matching,
    odd_parity_set,
    not_independent,
    invalid_spec,
    cap_exceeded,
    not_spanning_tree,
    not_eulerian,
};

inline const char* violation_name(Violation v)
{
    switch (v) {
    case Violation::not_tree_connected: return "not_tree_connected";
    case Violation::not_crossing: return "not_crossing";
    case Violation::disconnected: return "disconnected";
    case Violation::not_forest: return "not_forest";
    case Violation::not_subgraph: return "not_subgraph";
    case Violation::not_matching: return "not_matching";
    case Violation::odd_parity_set: return "odd_parity_set";
    case Violation::not_independent: return "not_independent";
    case Violation::invalid_spec: return "invalid_spec";
    case Violation::cap_exceeded: return "cap_exceeded";
    case Violation::not_spanning_tree: return "not_spanning_tree";
    case Violation::not_eulerian: return "not_eulerian";
    }
    return "unknown";
}

// Raised when an input breaks a documented precondition. The kind lets callers
// tell apart, e.g., "H is not m-tree-connected" from "e' is not crossing".
class PreconditionError : public std::invalid_argument {
public:
    PreconditionError(Violation kind, const std::string& what)
        : std::invalid_argument(std::string(violation_name(kind)) + ": " + what), kind_(kind)
    {
    }
    Violation kind() const { return kind_; }

private:
    Violation kind_;
};

}  // namespace treeconn
