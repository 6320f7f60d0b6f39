#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apa {

// Set partition of the 2k vertices {Top 1..k, Bot 1..k}, the basis objects of
// the partition monoid. Vertices are encoded as signed integers: +i for Top i,
// -i for Bot i (1 <= i <= k). Canonical form: vertices sorted inside each
// block, blocks sorted by their minimal vertex, both under the total order
// Top 1 < ... < Top k < Bot 1 < ... < Bot k.
class SetPartitionDiagram {
public:
    SetPartitionDiagram() : k_(0) {}
    SetPartitionDiagram(int k, std::vector<std::vector<int>> blocks);

    static SetPartitionDiagram identity(int k);
    // s_i: crosses strands i and i+1, 1 <= i <= k-1
    static SetPartitionDiagram s(int i, int k);
    // e_{2j-1}: singletons {j}, {j'}, 1 <= j <= k
    static SetPartitionDiagram e_odd(int j, int k);
    // e_{2i}: one block {i, i+1, i', (i+1)'}, 1 <= i <= k-1
    static SetPartitionDiagram e_even(int i, int k);
    // e_m for 1 <= m <= 2k-1, odd/even dispatch
    static SetPartitionDiagram e(int m, int k);

    int k() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // Index of the block containing vertex v, or -1.
    int block_of(int v) const;
    bool same_block(int u, int v) const;

    SetPartitionDiagram flipped() const;
    SetPartitionDiagram embedded(int big_k) const;

    // True if Top k and Bot k share a block (membership in the odd submonoid).
    bool in_odd_submonoid() const;

    friend bool operator==(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
        return a.k_ == b.k_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
        return !(a == b);
    }
    friend bool operator<(const SetPartitionDiagram& a, const SetPartitionDiagram& b) {
        if (a.k_ != b.k_) return a.k_ < b.k_;
        return a.less_blocks(b);
    }

    std::string str() const;

private:
    bool less_blocks(const SetPartitionDiagram& o) const;

    int k_;
    std::vector<std::vector<int>> blocks_;
};

struct ComposeResult {
    SetPartitionDiagram diagram;
    int middle_components = 0;
};

// Diagram product by stacking alpha on top of beta; counts the connected
// components confined to the identified middle row.
ComposeResult compose(const SetPartitionDiagram& alpha, const SetPartitionDiagram& beta);

// All of Pi_r embedded at size ceil(r/2); for odd r the diagrams where
// Top k and Bot k share a block. |result| = Bell(r).
std::vector<SetPartitionDiagram> enumerate_diagrams(int r);

}  // namespace apa
