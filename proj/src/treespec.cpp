#include "gts/treespec.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gts {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Character cursor that tracks line/column for error reporting.
struct Cursor {
    const std::string& text;
    size_t i = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return i >= text.size(); }
    char peek() const { return text[i]; }
    void advance() {
        if (text[i] == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        i++;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

struct Parser {
    Cursor cur;
    std::vector<TreeDomain::Node> nodes;
    Value val_max;

    // Two-phase: build a temporary child-list tree, then flatten so each
    // node's children are contiguous (stable child indexing).
    struct Raw {
        bool leaf = false;
        Value value = 0;
        std::vector<std::unique_ptr<Raw>> children;
    };

    std::unique_ptr<Raw> parse_node() {
        cur.skip_ws();
        if (cur.eof()) cur.fail("unexpected end of input, expected node");
        char ch = cur.peek();
        if (ch == '(') {
            int open_line = cur.line, open_col = cur.col;
            cur.advance();
            auto n = std::make_unique<Raw>();
            while (true) {
                cur.skip_ws();
                if (cur.eof())
                    throw ParseError("unbalanced parentheses, '(' never closed", open_line, open_col);
                if (cur.peek() == ')') {
                    cur.advance();
                    break;
                }
                n->children.push_back(parse_node());
            }
            if (n->children.empty()) cur.fail("interior node needs at least one child");
            return n;
        }
        if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
            int num_line = cur.line, num_col = cur.col;
            std::string tok;
            if (ch == '-') {
                tok += ch;
                cur.advance();
            }
            if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
                throw ParseError("expected digits after '-'", num_line, num_col);
            while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                tok += cur.peek();
                cur.advance();
            }
            long long v = 0;
            try {
                v = std::stoll(tok);
            } catch (const std::exception&) {
                throw ParseError("leaf value does not fit an integer", num_line, num_col);
            }
            if (v < -static_cast<long long>(val_max) || v > static_cast<long long>(val_max))
                throw ParseError("leaf value " + tok + " outside [-" + std::to_string(val_max) +
                                     ", " + std::to_string(val_max) + "]",
                                 num_line, num_col);
            auto n = std::make_unique<Raw>();
            n->leaf = true;
            n->value = static_cast<Value>(v);
            return n;
        }
        cur.fail(std::string("unexpected character '") + ch + "'");
    }

    // Breadth-first flatten keeps each node's children contiguous.
    void flatten(const Raw& root) {
        nodes.push_back({});
        std::vector<std::pair<const Raw*, int>> queue{{&root, 0}}; // raw, flat index
        std::vector<int> depth{0};
        for (size_t q = 0; q < queue.size(); q++) {
            const Raw* raw = queue[q].first;
            int idx = queue[q].second;
            nodes[idx].depth = depth[idx];
            if (raw->leaf) {
                nodes[idx].value = raw->value;
                continue;
            }
            nodes[idx].first_child = static_cast<int>(nodes.size());
            nodes[idx].nchildren = static_cast<int>(raw->children.size());
            for (const auto& c : raw->children) {
                int ci = static_cast<int>(nodes.size());
                nodes.push_back({});
                depth.push_back(nodes[idx].depth + 1);
                queue.emplace_back(c.get(), ci);
            }
        }
    }
};

} // namespace

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                         ": " + msg),
      line(line_),
      col(col_) {}

TreeDomain::TreeDomain(NodeType root_type, std::vector<Node> nodes, Value val_max)
    : root_type_(root_type), nodes_(std::move(nodes)), val_max_(val_max) {
    for (const auto& n : nodes_) height_ = std::max(height_, n.depth);
}

Pos TreeDomain::child(const Pos& p, int idx) const {
    const Node& n = node(p);
    return Pos{static_cast<uint64_t>(n.first_child + idx), 0, 0};
}

Value TreeDomain::evaluate(const Pos& p) const { return node(p).value; }

uint64_t TreeDomain::hash(const Pos& p) const { return splitmix64(p.a + 1); }

NodeType TreeDomain::node_type(const Pos& p) const {
    return (node(p).depth % 2 == 0) ? root_type_ : flip(root_type_);
}

std::unique_ptr<TreeDomain> load_tree(const std::string& text, Value val_max) {
    if (val_max < 1 || val_max > VAL_MAX_LIMIT)
        throw std::invalid_argument("val_max must lie in [1, 2^20]");
    Cursor cur{text};
    cur.skip_ws();
    // Header: "root: max" or "root: min".
    auto expect_word = [&cur](const std::string& w) {
        for (char ch : w) {
            if (cur.eof() || cur.peek() != ch) cur.fail("expected '" + w + "'");
            cur.advance();
        }
    };
    expect_word("root");
    cur.skip_ws();
    expect_word(":");
    cur.skip_ws();
    NodeType root_type;
    if (!cur.eof() && cur.peek() == 'm') {
        std::string word;
        while (!cur.eof() && std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            word += cur.peek();
            cur.advance();
        }
        if (word == "max")
            root_type = NodeType::MAX;
        else if (word == "min")
            root_type = NodeType::MIN;
        else
            cur.fail("root type must be 'max' or 'min', got '" + word + "'");
    } else {
        cur.fail("root type must be 'max' or 'min'");
    }

    Parser parser{std::move(cur), {}, val_max};
    auto raw = parser.parse_node();
    parser.cur.skip_ws();
    if (!parser.cur.eof()) parser.cur.fail("trailing input after tree body");
    parser.flatten(*raw);
    return std::make_unique<TreeDomain>(root_type, std::move(parser.nodes), val_max);
}

std::unique_ptr<TreeDomain> load_tree_file(const std::string& path, Value val_max) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tree file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_tree(ss.str(), val_max);
}

const char* const FIXTURE_TREE_TEXT =
    "root: max\n"
    "((((41 5)(12 90))((101 80)(20 30)))(((10 80)(36 35))((50 36)(25 3))))\n";

std::unique_ptr<TreeDomain> fixture_tree(Value val_max) {
    return load_tree(FIXTURE_TREE_TEXT, val_max);
}

} // namespace gts
