#pragma once

#include <string>
#include <vector>

namespace superz {

struct Block {
    int lambda;
    int parity;
};

// (p_1,...,p_r | q_1,...,q_s) merged into lambda_1 >= ... with even parts first among equals
struct Partition {
    std::vector<int> even;
    std::vector<int> odd;
    std::vector<Block> blocks;

    static Partition make(std::vector<int> even, std::vector<int> odd);
    static Partition parse(const std::string& s);
    std::string str() const;
    int m() const;
    int n() const;
    int largest() const { return blocks.empty() ? 0 : blocks.front().lambda; }
    size_t size() const { return blocks.size(); }
    bool operator==(const Partition& o) const { return even == o.even && odd == o.odd; }

    // even parts with even lambda and odd parts with odd lambda come in pairs
    bool osp_admissible() const;
};

// position of e^k v_i inside V; even blocks fill [0,m), odd blocks [m,m+n)
struct JordanLayout {
    std::vector<Block> blocks;
    std::vector<int> start;
    int N = 0;
    int m = 0;

    static JordanLayout of(const Partition& p);
    static JordanLayout of_order(const std::vector<Block>& blocks);
    int index(size_t i, int k) const { return start[i] + blocks[i].lambda - 1 - k; }
    // parity of each basis vector of V
    std::vector<int> eta() const;
    // sl2 weight 2k + 1 - lambda_i of e^k v_i, so that e has degree 2
    std::vector<int> weights() const;
};

}
