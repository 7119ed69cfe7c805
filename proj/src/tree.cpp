#include "coxspin/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace coxspin {

int PhyloTree::add_vertex() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
}

void PhyloTree::add_edge(int u, int v, Rational len) {
    adj[u].push_back({v, len});
    adj[v].push_back({u, len});
}

NewickParseError::NewickParseError(const std::string& msg, size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

ValenceError::ValenceError(const std::string& msg, int v)
    : std::runtime_error(msg + " (vertex " + std::to_string(v) + ")"), vertex(v) {}

namespace {

struct NewickParser {
    const std::string& s;
    size_t pos = 0;
    PhyloTree tree;

    explicit NewickParser(const std::string& str) : s(str) {}

    void skip_space() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_space();
        if (pos >= s.size()) throw NewickParseError("unexpected end of input", pos);
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw NewickParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    Rational parse_length() {
        skip_space();
        size_t start = pos;
        while (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
                                  s[pos] == '/' || s[pos] == '.'))
            ++pos;
        if (pos == start) throw NewickParseError("expected edge length", pos);
        std::string tok = s.substr(start, pos - start);
        try {
            if (tok.find('.') != std::string::npos) {
                // decimal: a.b -> rational
                size_t dot = tok.find('.');
                std::string frac = tok.substr(dot + 1);
                Rational num = rational_from_string(tok.substr(0, dot) + frac);
                Rational den(1);
                for (size_t i = 0; i < frac.size(); ++i) den *= 10;
                return num / den;
            }
            return rational_from_string(tok);
        } catch (const std::invalid_argument&) {
            throw NewickParseError("bad edge length '" + tok + "'", start);
        }
    }

    // Returns (vertex, edge length to parent).
    std::pair<int, Rational> parse_node() {
        Rational len(1);
        int v;
        if (peek() == '(') {
            ++pos;
            v = tree.add_vertex();
            while (true) {
                auto [child, clen] = parse_node();
                tree.add_edge(v, child, clen);
                if (peek() == ',') {
                    ++pos;
                    continue;
                }
                break;
            }
            expect(')');
        } else {
            size_t start = pos;
            if (!isdigit(static_cast<unsigned char>(peek())))
                throw NewickParseError("expected leaf label or '('", pos);
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            int label = std::stoi(s.substr(start, pos - start));
            v = tree.add_vertex();
            if (tree.leaf_vertex.count(label))
                throw NewickParseError("duplicate leaf label " + std::to_string(label), start);
            tree.leaf_vertex[label] = v;
        }
        skip_space();
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            len = parse_length();
            if (len <= 0) throw NewickParseError("edge length must be positive", pos);
        }
        return {v, len};
    }

    PhyloTree run() {
        auto [root, len] = parse_node();
        (void)len;  // a root length has no parent edge to live on
        expect(';');
        skip_space();
        if (pos != s.size()) throw NewickParseError("trailing input", pos);
        return std::move(tree);
    }
};

void validate_tree(const PhyloTree& t) {
    const int n = t.n_leaves();
    if (n < 3) throw std::invalid_argument("tree needs at least 3 leaves");
    for (int label = 1; label <= n; ++label)
        if (!t.leaf_vertex.count(label))
            throw std::invalid_argument("leaf labels must be exactly 1..n; missing " +
                                        std::to_string(label));
    std::set<int> leaf_ids;
    for (const auto& [label, v] : t.leaf_vertex) leaf_ids.insert(v);
    for (size_t v = 0; v < t.adj.size(); ++v) {
        int deg = t.degree(static_cast<int>(v));
        if (leaf_ids.count(static_cast<int>(v))) {
            if (deg != 1) throw ValenceError("leaf vertex with degree " + std::to_string(deg),
                                             static_cast<int>(v));
        } else if (deg != 3) {
            throw ValenceError("internal vertex with degree " + std::to_string(deg),
                               static_cast<int>(v));
        }
    }
}

}  // namespace

PhyloTree parse_newick(const std::string& s) {
    NewickParser parser(s);
    PhyloTree t = parser.run();
    validate_tree(t);
    return t;
}

namespace {

int min_leaf_below(const PhyloTree& t, int v, int parent, std::map<int, int>& vertex_label) {
    if (t.is_leaf(v)) return vertex_label.at(v);
    int best = 1 << 30;
    for (const auto& e : t.adj[v])
        if (e.to != parent) best = std::min(best, min_leaf_below(t, e.to, v, vertex_label));
    return best;
}

void write_subtree(const PhyloTree& t, int v, int parent, const Rational& len,
                   std::map<int, int>& vertex_label, std::string& out) {
    if (t.is_leaf(v)) {
        out += std::to_string(vertex_label.at(v));
    } else {
        std::vector<std::pair<int, const PhyloTree::Edge*>> children;
        for (const auto& e : t.adj[v])
            if (e.to != parent) children.emplace_back(min_leaf_below(t, e.to, v, vertex_label), &e);
        std::sort(children.begin(), children.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out += '(';
        for (size_t i = 0; i < children.size(); ++i) {
            if (i) out += ',';
            write_subtree(t, children[i].second->to, v, children[i].second->len, vertex_label, out);
        }
        out += ')';
    }
    out += ':' + to_string(len);
}

}  // namespace

std::string to_newick(const PhyloTree& t) {
    std::map<int, int> vertex_label;
    for (const auto& [label, v] : t.leaf_vertex) vertex_label[v] = label;
    int leaf1 = t.leaf_vertex.at(1);
    int root = t.adj[leaf1][0].to;

    std::vector<std::pair<int, const PhyloTree::Edge*>> children;
    for (const auto& e : t.adj[root])
        children.emplace_back(t.is_leaf(e.to) ? vertex_label.at(e.to)
                                              : min_leaf_below(t, e.to, root, vertex_label),
                              &e);
    std::sort(children.begin(), children.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out = "(";
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        write_subtree(t, children[i].second->to, root, children[i].second->len, vertex_label, out);
    }
    out += ");";
    return out;
}

std::vector<PhyloTree> enumerate_trees(int n) {
    if (n < 3 || n > 7) throw std::invalid_argument("enumerate_trees supports 3 <= n <= 7");
    // Edge-list representation while inserting leaves; vertices get rebuilt
    // into adjacency form at the end.
    struct Skeleton {
        int vertices;                          // 0..n-1 reserved for leaves 1..n
        std::vector<std::pair<int, int>> edges;
    };
    std::vector<Skeleton> current;
    current.push_back({4, {{0, 3}, {1, 3}, {2, 3}}});  // star on leaves 1,2,3
    for (int k = 4; k <= n; ++k) {
        std::vector<Skeleton> next;
        for (const auto& sk : current) {
            for (size_t e = 0; e < sk.edges.size(); ++e) {
                Skeleton ns = sk;
                // renumber so the new leaf gets id k-1, shifting internals up
                for (auto& [u, v] : ns.edges) {
                    if (u >= k - 1) ++u;
                    if (v >= k - 1) ++v;
                }
                auto [a, b] = ns.edges[e];
                int mid = ns.vertices + 1;  // next free id after the shift
                ns.vertices += 2;           // the new leaf and the new internal vertex
                ns.edges[e] = {a, mid};
                ns.edges.emplace_back(b, mid);
                ns.edges.emplace_back(k - 1, mid);
                next.push_back(std::move(ns));
            }
        }
        current = std::move(next);
    }
    std::vector<PhyloTree> out;
    for (const auto& sk : current) {
        PhyloTree t;
        int maxv = 0;
        for (auto [u, v] : sk.edges) maxv = std::max({maxv, u, v});
        for (int i = 0; i <= maxv; ++i) t.add_vertex();
        for (auto [u, v] : sk.edges) t.add_edge(u, v, Rational(1));
        for (int label = 1; label <= n; ++label) t.leaf_vertex[label] = label - 1;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::vector<Rational>> leaf_distances(const PhyloTree& t) {
    const int n = t.n_leaves();
    std::vector<std::vector<Rational>> d(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    std::map<int, int> vertex_label;
    for (const auto& [label, v] : t.leaf_vertex) vertex_label[v] = label;
    for (const auto& [label, start] : t.leaf_vertex) {
        std::vector<char> seen(t.adj.size(), 0);
        std::vector<std::pair<int, Rational>> stack{{start, Rational(0)}};
        seen[start] = 1;
        while (!stack.empty()) {
            auto [v, dist] = stack.back();
            stack.pop_back();
            if (t.is_leaf(v) && v != start) d[label][vertex_label.at(v)] = dist;
            for (const auto& e : t.adj[v]) {
                if (seen[e.to]) continue;
                seen[e.to] = 1;
                stack.emplace_back(e.to, dist + e.len);
            }
        }
    }
    return d;
}

namespace {

Matching matching_from_pairs(const EvenSubset& B, std::vector<std::pair<int, int>> pairs) {
    for (auto& [i, j] : pairs)
        if (i > j) std::swap(i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> concat;
    for (auto [i, j] : pairs) {
        concat.push_back(i);
        concat.push_back(j);
    }
    return Matching{pairs, permutation_sign(B.elems, concat)};
}

}  // namespace

Matching disjoint_path_partition(const PhyloTree& t, const EvenSubset& B) {
    if (B.empty()) throw std::invalid_argument("disjoint_path_partition: empty subset");
    std::map<int, int> vertex_label;
    for (const auto& [label, v] : t.leaf_vertex) vertex_label[v] = label;

    std::vector<std::pair<int, int>> pairs;
    // Rooted walk from a leaf in B; each subtree hands up at most one
    // unmatched socket, and two sockets meeting at a vertex must pair.
    std::function<std::vector<int>(int, int)> dfs = [&](int v, int parent) -> std::vector<int> {
        if (t.is_leaf(v)) {
            int label = vertex_label.at(v);
            if (B.contains(label)) return {label};
            return {};
        }
        std::vector<int> open;
        for (const auto& e : t.adj[v]) {
            if (e.to == parent) continue;
            auto up = dfs(e.to, v);
            open.insert(open.end(), up.begin(), up.end());
        }
        while (open.size() >= 2) {
            int a = open[0], b = open[1];
            pairs.emplace_back(a, b);
            open.erase(open.begin(), open.begin() + 2);
        }
        return open;
    };

    int root_label = B.elems.front();
    int root_leaf = t.leaf_vertex.at(root_label);
    auto open = dfs(t.adj[root_leaf][0].to, root_leaf);
    if (open.size() != 1 || open[0] == root_label)
        throw std::logic_error("disjoint_path_partition: parity bookkeeping failed");
    pairs.emplace_back(root_label, open[0]);
    return matching_from_pairs(B, std::move(pairs));
}

bool paths_edge_disjoint(const PhyloTree& t, const std::vector<std::pair<int, int>>& pairs) {
    std::set<std::pair<int, int>> used;
    for (auto [la, lb] : pairs) {
        int target = t.leaf_vertex.at(lb);
        // path from la's vertex to target
        std::vector<int> parent(t.adj.size(), -1);
        std::vector<int> stack{t.leaf_vertex.at(la)};
        std::vector<char> seen(t.adj.size(), 0);
        seen[stack[0]] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : t.adj[v]) {
                if (seen[e.to]) continue;
                seen[e.to] = 1;
                parent[e.to] = v;
                stack.push_back(e.to);
            }
        }
        for (int v = target; parent[v] != -1; v = parent[v]) {
            std::pair<int, int> edge{std::min(v, parent[v]), std::max(v, parent[v])};
            if (!used.insert(edge).second) return false;
        }
    }
    return true;
}

BruteforceMin min_weight_matching(const PhyloTree& t, const EvenSubset& B) {
    auto d = leaf_distances(t);
    BruteforceMin out;
    bool first = true;
    for (const auto& mu : matchings_with_sign(B)) {
        Rational total(0);
        for (auto [i, j] : mu.pairs) total += d[i][j];
        if (first || total < out.total) {
            out.best = mu;
            out.total = total;
            out.unique = true;
            first = false;
        } else if (total == out.total) {
            out.unique = false;
        }
    }
    return out;
}

PhyloTree with_prime_lengths(const PhyloTree& t) {
    static const long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
    PhyloTree out = t;
    size_t idx = 0;
    std::set<std::pair<int, int>> assigned;
    for (size_t v = 0; v < out.adj.size(); ++v) {
        for (auto& e : out.adj[v]) {
            std::pair<int, int> key{std::min(static_cast<int>(v), e.to),
                                    std::max(static_cast<int>(v), e.to)};
            if (assigned.insert(key).second) {
                if (idx >= std::size(primes)) throw std::logic_error("prime table too small");
                ++idx;
            }
        }
    }
    // second pass: deterministic assignment by sorted edge key
    std::map<std::pair<int, int>, Rational> lengths;
    size_t k = 0;
    for (const auto& key : assigned) lengths[key] = Rational(primes[k++]);
    for (size_t v = 0; v < out.adj.size(); ++v)
        for (auto& e : out.adj[v]) {
            std::pair<int, int> key{std::min(static_cast<int>(v), e.to),
                                    std::max(static_cast<int>(v), e.to)};
            e.len = lengths[key];
        }
    return out;
}

LeadingForm leading_form_psi(const EvenSubset& B, const PhyloTree& t) {
    Matching part = disjoint_path_partition(t, B);
    std::vector<int> i_list, complement;
    for (auto [i, j] : part.pairs) i_list.push_back(i);
    std::set<int> iset(i_list.begin(), i_list.end());
    for (int b : B.elems)
        if (!iset.count(b)) complement.push_back(b);

    auto argmin_over_bijections = [&](const PhyloTree& tree) {
        auto d = leaf_distances(tree);
        std::vector<int> j_list = complement;
        std::sort(j_list.begin(), j_list.end());
        LeadingForm out;
        Rational best(0);
        bool first = true;
        do {
            Rational total(0);
            for (size_t r = 0; r < i_list.size(); ++r) total += d[i_list[r]][j_list[r]];
            if (first || total < best) {
                best = total;
                out.pairs.clear();
                for (size_t r = 0; r < i_list.size(); ++r)
                    out.pairs.emplace_back(std::min(i_list[r], j_list[r]),
                                           std::max(i_list[r], j_list[r]));
                std::sort(out.pairs.begin(), out.pairs.end());
                out.unique = true;
                first = false;
            } else if (total == best) {
                out.unique = false;
            }
        } while (std::next_permutation(j_list.begin(), j_list.end()));
        return out;
    };

    LeadingForm out = argmin_over_bijections(t);
    if (!out.unique) out = argmin_over_bijections(with_prime_lengths(t));
    return out;
}

}  // namespace coxspin
