#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "totpos/error.hpp"
#include "totpos/matrix.hpp"
#include "totpos/permutation.hpp"
#include "totpos/words.hpp"

namespace totpos {

/// Double wiring diagram: a shuffle of a barred and an unbarred reduced word for w_o.
/// Barred lines carry row indices, unbarred lines carry column indices.
class DoubleWiringDiagram {
public:
    DoubleWiringDiagram() = default;

    explicit DoubleWiringDiagram(Word word) : word_(std::move(word)) {
        for (const auto& l : word_.letters)
            if (l.circled()) throw InvalidArgument("wiring diagrams contain no circled letters");
        const auto w0 = Permutation::longest(word_.n);
        if (!is_reduced(word_.subword(LetterKind::Barred), w0))
            throw InvalidArgument("barred subword is not a reduced word for the longest permutation");
        if (!is_reduced(word_.subword(LetterKind::Unbarred), w0))
            throw InvalidArgument("unbarred subword is not a reduced word for the longest permutation");
    }

    static DoubleWiringDiagram parse(const std::string& text, int n) { return DoubleWiringDiagram(Word::parse(text, n)); }

    /// The diagram underlying a factorization scheme (circled letters dropped).
    static DoubleWiringDiagram of_scheme(const Word& scheme) {
        std::vector<Letter> ls;
        for (const auto& l : scheme.letters)
            if (!l.circled()) ls.push_back(l);
        return DoubleWiringDiagram(Word(scheme.n, std::move(ls)));
    }

    [[nodiscard]] int n() const noexcept { return word_.n; }
    [[nodiscard]] const Word& word() const noexcept { return word_; }
    [[nodiscard]] std::string str() const { return word_.str(); }

    friend bool operator==(const DoubleWiringDiagram&, const DoubleWiringDiagram&) = default;

private:
    Word word_;
};

/// One chamber: its height (1 = bottom), its minor, and whether it is bounded.
struct Chamber {
    int height = 0;
    MinorSpec minor;
    bool bounded = false;
};

namespace detail {

// Line labels read bottom-to-top: barred n..1, unbarred 1..n.
struct WireState {
    std::vector<int> light;
    std::vector<int> dark;

    explicit WireState(int n) {
        for (int k = n; k >= 1; --k) light.push_back(k);
        for (int k = 1; k <= n; ++k) dark.push_back(k);
    }

    void cross(const Letter& l) {
        auto& v = l.kind == LetterKind::Barred ? light : dark;
        std::swap(v[static_cast<std::size_t>(l.index - 1)], v[static_cast<std::size_t>(l.index)]);
    }

    [[nodiscard]] MinorSpec chamber(int h) const { return mixed(h, *this, *this); }

    // Rows from `rows_from`, columns from `cols_from`, both at height h.
    static MinorSpec mixed(int h, const WireState& rows_from, const WireState& cols_from) {
        MinorSpec s{{rows_from.light.begin(), rows_from.light.begin() + h}, {cols_from.dark.begin(), cols_from.dark.begin() + h}};
        std::sort(s.rows.begin(), s.rows.end());
        std::sort(s.cols.begin(), s.cols.end());
        return s;
    }
};

}  // namespace detail

/// All n^2 chambers, left to right: the n-1 leftmost chambers by height, then the chamber
/// to the right of each crossing, then the top chamber (the determinant).
inline std::vector<Chamber> chambers(const DoubleWiringDiagram& d) {
    const int n = d.n();
    detail::WireState st(n);
    std::vector<Chamber> out;
    std::vector<std::size_t> last(static_cast<std::size_t>(n), 0);
    for (int h = 1; h < n; ++h) {
        last[static_cast<std::size_t>(h)] = out.size();
        out.push_back({h, st.chamber(h), false});
    }
    for (const auto& l : d.word().letters) {
        st.cross(l);
        last[static_cast<std::size_t>(l.index)] = out.size();
        out.push_back({l.index, st.chamber(l.index), true});
    }
    for (int h = 1; h < n; ++h) out[last[static_cast<std::size_t>(h)]].bounded = false;
    for (int h = 1; h < n; ++h) out[static_cast<std::size_t>(h - 1)].bounded = false;
    out.push_back({n, st.chamber(n), false});
    return out;
}

inline std::vector<MinorSpec> chamber_minors(const DoubleWiringDiagram& d) {
    std::vector<MinorSpec> out;
    for (const auto& c : chambers(d)) out.push_back(c.minor);
    return out;
}

inline std::vector<MinorSpec> bounded_chambers(const DoubleWiringDiagram& d) {
    std::vector<MinorSpec> out;
    for (const auto& c : chambers(d))
        if (c.bounded) out.push_back(c.minor);
    return out;
}

/// Isotopy key: the sorted multiset of chamber minors.
inline std::vector<MinorSpec> isotopy_key(const DoubleWiringDiagram& d) {
    auto k = chamber_minors(d);
    std::sort(k.begin(), k.end());
    return k;
}

/// The lexicographically minimal diagram: barred (1 | 2 1 | 3 2 1 | ...) then the same word unbarred.
/// Its chamber minors are the initial minors.
inline DoubleWiringDiagram lex_minimal(int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<int> w;
    for (int k = 1; k < n; ++k)
        for (int j = k; j >= 1; --j) w.push_back(j);
    std::vector<Letter> ls;
    for (int j : w) ls.push_back(Letter::down(j));
    for (int j : w) ls.push_back(Letter::up(j));
    return DoubleWiringDiagram(Word(n, std::move(ls)));
}

enum class DiagramMoveKind { BraidBarred, BraidUnbarred, Mixed };

/// A move exchanging chamber Y for Z; the identity AC + BD = YZ relates the six minors.
struct DiagramMove {
    DiagramMoveKind kind = DiagramMoveKind::Mixed;
    std::size_t position = 0;  ///< first letter of the block in the source word
    DoubleWiringDiagram source;
    DoubleWiringDiagram target;
    MinorSpec a, b, c, d, y, z;
};

namespace detail {

inline detail::WireState state_before(const Word& w, std::size_t p) {
    WireState st(w.n);
    for (std::size_t k = 0; k < p; ++k) st.cross(w[k]);
    return st;
}

inline bool is_mixed_pair(const Word& w, std::size_t p) {
    return p + 1 < w.size() && w[p].index == w[p + 1].index && w[p].kind != w[p + 1].kind;
}

inline bool is_braid_triple(const Word& w, std::size_t p) {
    if (p + 2 >= w.size()) return false;
    const Letter &a = w[p], &b = w[p + 1], &c = w[p + 2];
    return a.kind == b.kind && b.kind == c.kind && a.index == c.index && std::abs(a.index - b.index) == 1;
}

inline bool is_commuting_pair(const Word& w, std::size_t p) {
    if (p + 1 >= w.size()) return false;
    const Letter &a = w[p], &b = w[p + 1];
    if (a.kind == b.kind) return std::abs(a.index - b.index) >= 2;
    return a.index != b.index;
}

/// Applies a braid or mixed move at p and reports the chambers involved.
inline DiagramMove make_move(const DoubleWiringDiagram& src, std::size_t p) {
    const Word& w = src.word();
    DiagramMove m;
    m.position = p;
    m.source = src;
    WireState before = state_before(w, p);
    Word nw = w;
    if (is_braid_triple(w, p)) {
        const int i = std::min(w[p].index, w[p + 1].index);
        const bool low_first = w[p].index == i;
        m.kind = w[p].kind == LetterKind::Barred ? DiagramMoveKind::BraidBarred : DiagramMoveKind::BraidUnbarred;
        std::swap(nw.letters[p].index, nw.letters[p + 1].index);
        nw.letters[p + 2].index = nw.letters[p].index;
        WireState after = before;
        for (std::size_t k = p; k < p + 3; ++k) after.cross(w[k]);
        WireState mid = before;
        mid.cross(w[p]);
        WireState mid_new = before;
        mid_new.cross(nw[p]);
        m.a = before.chamber(i);
        m.b = before.chamber(i + 1);
        m.d = after.chamber(i);
        m.c = after.chamber(i + 1);
        const MinorSpec here = low_first ? mid.chamber(i) : mid.chamber(i + 1);
        const MinorSpec there = low_first ? mid_new.chamber(i + 1) : mid_new.chamber(i);
        m.y = low_first ? here : there;
        m.z = low_first ? there : here;
    } else if (is_mixed_pair(w, p)) {
        const int i = w[p].index;
        m.kind = DiagramMoveKind::Mixed;
        std::swap(nw.letters[p], nw.letters[p + 1]);
        WireState after = before;
        after.cross(w[p]);
        after.cross(w[p + 1]);
        m.a = before.chamber(i);
        m.c = after.chamber(i);
        m.b = before.chamber(i + 1);
        m.d = i > 1 ? before.chamber(i - 1) : MinorSpec{};
        const MinorSpec light_before_dark_after = WireState::mixed(i, before, after);
        const MinorSpec light_after_dark_before = WireState::mixed(i, after, before);
        m.y = light_before_dark_after;
        m.z = light_after_dark_before;
    } else {
        throw InvalidArgument("no braid or mixed move at position " + std::to_string(p));
    }
    m.target = DoubleWiringDiagram(std::move(nw));
    return m;
}

inline std::vector<Word> commutation_class(const Word& start) {
    std::set<std::vector<Letter>> seen{start.letters};
    std::deque<Word> queue{start};
    std::vector<Word> out;
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (!is_commuting_pair(w, p)) continue;
            Word v = w;
            std::swap(v.letters[p], v.letters[p + 1]);
            if (seen.insert(v.letters).second) queue.push_back(v);
        }
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace detail

/// Applies the braid or mixed move whose block starts at `position`.
inline DiagramMove apply_local_move(const DoubleWiringDiagram& d, std::size_t position) {
    return detail::make_move(d, position);
}

/// One move per neighbouring isotopy class, found by searching the commutation class of the word.
inline std::vector<DiagramMove> local_moves(const DoubleWiringDiagram& d) {
    std::vector<DiagramMove> out;
    std::set<std::vector<MinorSpec>> seen;
    for (const Word& w : detail::commutation_class(d.word())) {
        const DoubleWiringDiagram dw(w);
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (!detail::is_braid_triple(w, p) && !detail::is_mixed_pair(w, p)) continue;
            DiagramMove m = detail::make_move(dw, p);
            if (seen.insert(isotopy_key(m.target)).second) out.push_back(std::move(m));
        }
    }
    return out;
}

/// Graph of isotopy classes of diagrams joined by local moves.
struct PhiGraph {
    struct Vertex {
        DoubleWiringDiagram representative;
        std::vector<MinorSpec> key;      ///< sorted chamber minors
        std::vector<MinorSpec> bounded;  ///< sorted bounded chamber minors
    };
    struct EdgeInfo {
        std::size_t from = 0;
        std::size_t to = 0;
        DiagramMove move;
    };
    int n = 0;
    std::vector<Vertex> vertices;
    std::vector<EdgeInfo> edges;
};

/// Breadth-first closure of the diagram words from the minimal diagram under commutations,
/// braid moves and mixed moves, grouped into isotopy classes.
inline PhiGraph enumerate_phi(int n, int guard = 4) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (n > guard) throw GuardExceeded(n, guard);
    PhiGraph g;
    g.n = n;
    std::map<std::vector<MinorSpec>, std::size_t> index;
    std::set<std::pair<std::size_t, std::size_t>> edge_seen;
    auto vertex_of = [&](const DoubleWiringDiagram& d) {
        auto key = isotopy_key(d);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        auto b = bounded_chambers(d);
        std::sort(b.begin(), b.end());
        g.vertices.push_back({d, key, std::move(b)});
        index.emplace(std::move(key), g.vertices.size() - 1);
        return g.vertices.size() - 1;
    };

    const DoubleWiringDiagram start = lex_minimal(n);
    std::set<std::vector<Letter>> seen{start.word().letters};
    std::deque<DoubleWiringDiagram> queue{start};
    vertex_of(start);
    while (!queue.empty()) {
        const DoubleWiringDiagram d = std::move(queue.front());
        queue.pop_front();
        const Word& w = d.word();
        const std::size_t from = vertex_of(d);
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (detail::is_commuting_pair(w, p)) {
                Word v = w;
                std::swap(v.letters[p], v.letters[p + 1]);
                if (seen.insert(v.letters).second) queue.emplace_back(std::move(v));
            }
            if (detail::is_braid_triple(w, p) || detail::is_mixed_pair(w, p)) {
                DiagramMove m = detail::make_move(d, p);
                const std::size_t to = vertex_of(m.target);
                if (to != from && edge_seen.insert(std::minmax(from, to)).second) g.edges.push_back({from, to, m});
                if (seen.insert(m.target.word().letters).second) queue.push_back(m.target);
            }
        }
    }
    return g;
}

/// Every shuffle of a barred and an unbarred reduced word for w_o.
inline std::vector<DoubleWiringDiagram> all_diagrams(int n, int guard = 4) {
    if (n > guard) throw GuardExceeded(n, guard);
    const auto words = reduced_words(Permutation::longest(n));
    const std::size_t len = words.front().size();
    std::vector<DoubleWiringDiagram> out;
    for (const auto& bw : words)
        for (const auto& uw : words) {
            // Choose which of the 2*len slots hold barred letters.
            std::vector<bool> mask(2 * len, false);
            std::fill(mask.begin(), mask.begin() + static_cast<long>(len), true);
            std::sort(mask.begin(), mask.end());
            do {
                std::vector<Letter> ls;
                std::size_t bi = 0, ui = 0;
                for (bool barred : mask) ls.push_back(barred ? Letter::down(bw[bi++]) : Letter::up(uw[ui++]));
                out.emplace_back(Word(n, std::move(ls)));
            } while (std::next_permutation(mask.begin(), mask.end()));
        }
    return out;
}

inline std::string to_dot(const PhiGraph& g) {
    std::ostringstream os;
    os << "graph phi" << g.n << " {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"";
        for (std::size_t k = 0; k < g.vertices[v].bounded.size(); ++k) os << (k ? " " : "") << to_string(g.vertices[v].bounded[k]);
        os << "\", word=\"" << g.vertices[v].representative.str() << "\"];\n";
    }
    for (const auto& e : g.edges) os << "  v" << e.from << " -- v" << e.to << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace totpos
