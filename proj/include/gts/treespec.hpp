#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gts/domain.hpp"

namespace gts {

// Explicit tree domain loaded from text:
//   line 1:  root: max   (or "root: min")
//   rest:    one s-expression; a leaf is an integer, an interior node is a
//            parenthesized child list. Whitespace-insensitive.
// Node types alternate by depth starting from the declared root type.
class TreeDomain : public SearchDomain {
public:
    struct Node {
        int first_child = -1; // index into nodes_, children contiguous
        int nchildren = 0;    // 0 = leaf
        int depth = 0;        // from root
        Value value = 0;      // leaves only
    };

    TreeDomain(NodeType root_type, std::vector<Node> nodes, Value val_max);

    std::string name() const override { return "tree"; }
    Pos root() const override { return Pos{0, 0, 0}; }
    bool is_leaf(const Pos& p) const override { return node(p).nchildren == 0; }
    int child_count(const Pos& p) const override { return node(p).nchildren; }
    Pos child(const Pos& p, int idx) const override;
    Value evaluate(const Pos& p) const override;
    uint64_t hash(const Pos& p) const override;
    NodeType node_type(const Pos& p) const override;
    Value val_max() const override { return val_max_; }
    int feature_count() const override { return 256; }

    int height() const { return height_; }
    size_t node_count() const { return nodes_.size(); }

private:
    const Node& node(const Pos& p) const { return nodes_[p.a]; }

    NodeType root_type_;
    std::vector<Node> nodes_;
    Value val_max_;
    int height_ = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col);
    int line;
    int col;
};

// Parses the TreeSpec text format. Throws ParseError with line/column on
// malformed input and on leaf values outside [-val_max, val_max].
std::unique_ptr<TreeDomain> load_tree(const std::string& text, Value val_max = VAL_MAX_LIMIT);

std::unique_ptr<TreeDomain> load_tree_file(const std::string& path, Value val_max = VAL_MAX_LIMIT);

// The worked example tree used throughout the docs and tests: 16 leaves,
// depth 4, max root, minimax value 35.
extern const char* const FIXTURE_TREE_TEXT;

std::unique_ptr<TreeDomain> fixture_tree(Value val_max = VAL_MAX_LIMIT);

} // namespace gts
