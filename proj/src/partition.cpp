#include "apa/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace apa {

namespace {

// Top 1 < ... < Top k < Bot 1 < ... < Bot k
bool vertex_less(int u, int v) {
    bool ut = u > 0, vt = v > 0;
    if (ut != vt) return ut;
    return std::abs(u) < std::abs(v);
}

struct DisjointSet {
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

}  // namespace

SetPartitionDiagram::SetPartitionDiagram(int k, std::vector<std::vector<int>> blocks)
    : k_(k), blocks_(std::move(blocks)) {
    std::vector<char> seen(2 * k + 1, 0);
    int count = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        for (int v : b) {
            int i = std::abs(v);
            if (v == 0 || i < 1 || i > k) throw std::invalid_argument("vertex out of range");
            int slot = (v > 0 ? i : k + i);
            if (seen[slot]) throw std::invalid_argument("vertex repeated across blocks");
            seen[slot] = 1;
            ++count;
        }
        std::sort(b.begin(), b.end(), vertex_less);
    }
    if (count != 2 * k) throw std::invalid_argument("blocks do not cover all vertices");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return vertex_less(a.front(), b.front());
              });
}

SetPartitionDiagram SetPartitionDiagram::identity(int k) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(k);
    for (int i = 1; i <= k; ++i) blocks.push_back({i, -i});
    return SetPartitionDiagram(k, std::move(blocks));
}

SetPartitionDiagram SetPartitionDiagram::s(int i, int k) {
    if (i < 1 || i + 1 > k) throw std::out_of_range("s_i index");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) {
        if (j == i)
            blocks.push_back({i, -(i + 1)});
        else if (j == i + 1)
            blocks.push_back({i + 1, -i});
        else
            blocks.push_back({j, -j});
    }
    return SetPartitionDiagram(k, std::move(blocks));
}

SetPartitionDiagram SetPartitionDiagram::e_odd(int j, int k) {
    if (j < 1 || j > k) throw std::out_of_range("e_{2j-1} index");
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= k; ++i) {
        if (i == j) {
            blocks.push_back({i});
            blocks.push_back({-i});
        } else {
            blocks.push_back({i, -i});
        }
    }
    return SetPartitionDiagram(k, std::move(blocks));
}

SetPartitionDiagram SetPartitionDiagram::e_even(int i, int k) {
    if (i < 1 || i + 1 > k) throw std::out_of_range("e_{2i} index");
    std::vector<std::vector<int>> blocks;
    for (int j = 1; j <= k; ++j) {
        if (j == i)
            blocks.push_back({i, i + 1, -i, -(i + 1)});
        else if (j != i + 1)
            blocks.push_back({j, -j});
    }
    return SetPartitionDiagram(k, std::move(blocks));
}

SetPartitionDiagram SetPartitionDiagram::e(int m, int k) {
    if (m < 1 || m > 2 * k - 1) throw std::out_of_range("e_m index");
    return (m % 2 == 1) ? e_odd((m + 1) / 2, k) : e_even(m / 2, k);
}

int SetPartitionDiagram::block_of(int v) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int u : blocks_[b])
            if (u == v) return static_cast<int>(b);
    return -1;
}

bool SetPartitionDiagram::same_block(int u, int v) const {
    int b = block_of(u);
    return b >= 0 && b == block_of(v);
}

SetPartitionDiagram SetPartitionDiagram::flipped() const {
    std::vector<std::vector<int>> blocks = blocks_;
    for (auto& b : blocks)
        for (int& v : b) v = -v;
    return SetPartitionDiagram(k_, std::move(blocks));
}

SetPartitionDiagram SetPartitionDiagram::embedded(int big_k) const {
    if (big_k < k_) throw std::invalid_argument("embedding target smaller than source");
    std::vector<std::vector<int>> blocks = blocks_;
    for (int i = k_ + 1; i <= big_k; ++i) blocks.push_back({i, -i});
    return SetPartitionDiagram(big_k, std::move(blocks));
}

bool SetPartitionDiagram::in_odd_submonoid() const { return same_block(k_, -k_); }

bool SetPartitionDiagram::less_blocks(const SetPartitionDiagram& o) const {
    auto flat = [](const SetPartitionDiagram& d) {
        std::vector<int> key;
        for (const auto& b : d.blocks_) {
            for (int v : b) key.push_back(v > 0 ? v : d.k_ + std::abs(v));
            key.push_back(0);  // block separator
        }
        return key;
    };
    return flat(*this) < flat(o);
}

std::string SetPartitionDiagram::str() const {
    std::string s = "{";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += ",";
        s += "{";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) s += ",";
            int v = blocks_[b][i];
            s += std::to_string(std::abs(v));
            if (v < 0) s += "'";
        }
        s += "}";
    }
    return s + "}";
}

ComposeResult compose(const SetPartitionDiagram& alpha, const SetPartitionDiagram& beta) {
    if (alpha.k() != beta.k()) throw std::invalid_argument("compose: size mismatch");
    const int k = alpha.k();
    // Rows: alpha-top 0..k-1, shared middle k..2k-1, beta-bottom 2k..3k-1.
    DisjointSet ds(3 * k);
    auto top_slot = [k](int i) { return i - 1; };
    auto mid_slot = [k](int i) { return k + i - 1; };
    auto bot_slot = [k](int i) { return 2 * k + i - 1; };
    for (const auto& b : alpha.blocks()) {
        int first = b.front();
        int fs = first > 0 ? top_slot(first) : mid_slot(-first);
        for (int v : b) ds.unite(fs, v > 0 ? top_slot(v) : mid_slot(-v));
    }
    for (const auto& b : beta.blocks()) {
        int first = b.front();
        int fs = first > 0 ? mid_slot(first) : bot_slot(-first);
        for (int v : b) ds.unite(fs, v > 0 ? mid_slot(v) : bot_slot(-v));
    }
    std::vector<std::vector<int>> out(3 * k);
    for (int i = 1; i <= k; ++i) {
        out[ds.find(top_slot(i))].push_back(i);
        out[ds.find(bot_slot(i))].push_back(-i);
    }
    int middles = 0;
    std::set<int> seen_mid;
    for (int i = 1; i <= k; ++i) {
        int r = ds.find(mid_slot(i));
        if (out[r].empty() && seen_mid.insert(r).second) ++middles;
    }
    std::vector<std::vector<int>> blocks;
    for (auto& b : out)
        if (!b.empty()) blocks.push_back(std::move(b));
    return {SetPartitionDiagram(k, std::move(blocks)), middles};
}

std::vector<SetPartitionDiagram> enumerate_diagrams(int r) {
    if (r < 0) throw std::invalid_argument("negative rank");
    const int k = (r + 1) / 2;
    if (r == 0) return {SetPartitionDiagram::identity(0)};
    // Units to partition: all 2k vertices, with Top k and Bot k fused when r odd.
    std::vector<std::vector<int>> units;
    for (int i = 1; i <= k; ++i) units.push_back({i});
    for (int i = 1; i <= k; ++i) {
        if (r % 2 == 1 && i == k)
            units[k - 1].push_back(-k);
        else
            units.push_back({-i});
    }
    const int n = static_cast<int>(units.size());
    std::vector<SetPartitionDiagram> result;
    // restricted growth strings
    std::vector<int> a(n, 0);
    auto emit = [&] {
        int nb = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks(nb);
        for (int i = 0; i < n; ++i)
            for (int v : units[i]) blocks[a[i]].push_back(v);
        result.emplace_back(k, std::move(blocks));
    };
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            emit();
            return;
        }
        for (int v = 0; v <= used; ++v) {
            a[pos] = v;
            self(self, pos + 1, std::max(used, v + 1));
        }
    };
    rec(rec, 0, 0);
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace apa
