#include "superz/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superz/scalar.hpp"

namespace superz {

Partition Partition::make(std::vector<int> even, std::vector<int> odd)
{
    for (int x : even)
        if (x <= 0) throw Error("BadPartition", "parts must be positive");
    for (int x : odd)
        if (x <= 0) throw Error("BadPartition", "parts must be positive");
    std::sort(even.rbegin(), even.rend());
    std::sort(odd.rbegin(), odd.rend());
    Partition p;
    p.even = even;
    p.odd = odd;
    for (int x : even) p.blocks.push_back({x, 0});
    for (int x : odd) p.blocks.push_back({x, 1});
    std::stable_sort(p.blocks.begin(), p.blocks.end(), [](const Block& a, const Block& b) {
        if (a.lambda != b.lambda) return a.lambda > b.lambda;
        return a.parity < b.parity;
    });
    return p;
}

static std::vector<int> parse_parts(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        int mult = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            mult = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
        }
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw Error("BadPartition", "bad part " + tok);
        for (int i = 0; i < mult; ++i) out.push_back(v);
    }
    return out;
}

Partition Partition::parse(const std::string& s)
{
    auto bar = s.find('|');
    if (bar == std::string::npos) throw Error("BadPartition", "partition needs the form p1,p2,...|q1,q2,...");
    try {
        return make(parse_parts(s.substr(0, bar)), parse_parts(s.substr(bar + 1)));
    } catch (const std::invalid_argument&) {
        throw Error("BadPartition", "cannot parse partition " + s);
    } catch (const std::out_of_range&) {
        throw Error("BadPartition", "cannot parse partition " + s);
    }
}

std::string Partition::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < even.size(); ++i) os << (i ? "," : "") << even[i];
    os << "|";
    for (size_t i = 0; i < odd.size(); ++i) os << (i ? "," : "") << odd[i];
    return os.str();
}

int Partition::m() const
{
    int s = 0;
    for (int x : even) s += x;
    return s;
}

int Partition::n() const
{
    int s = 0;
    for (int x : odd) s += x;
    return s;
}

bool Partition::osp_admissible() const
{
    std::map<int, int> ce, co;
    for (int x : even) ce[x]++;
    for (int x : odd) co[x]++;
    for (auto& [l, c] : ce)
        if (l % 2 == 0 && c % 2) return false;
    for (auto& [l, c] : co)
        if (l % 2 == 1 && c % 2) return false;
    return true;
}

JordanLayout JordanLayout::of_order(const std::vector<Block>& blocks)
{
    JordanLayout L;
    L.blocks = blocks;
    L.start.resize(blocks.size());
    int pos = 0;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].parity == 0) {
            L.start[i] = pos;
            pos += blocks[i].lambda;
        }
    L.m = pos;
    for (size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].parity == 1) {
            L.start[i] = pos;
            pos += blocks[i].lambda;
        }
    L.N = pos;
    return L;
}

JordanLayout JordanLayout::of(const Partition& p)
{
    return of_order(p.blocks);
}

std::vector<int> JordanLayout::eta() const
{
    std::vector<int> e(size_t(N), 0);
    for (int i = m; i < N; ++i) e[size_t(i)] = 1;
    return e;
}

std::vector<int> JordanLayout::weights() const
{
    std::vector<int> w(size_t(N), 0);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int k = 0; k < blocks[i].lambda; ++k) w[size_t(index(i, k))] = 2 * k + 1 - blocks[i].lambda;
    return w;
}

}
