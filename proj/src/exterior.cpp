#include "lie3/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie3 {

namespace {

void check_n(int n) {
    if (n < 2) throw std::invalid_argument("rise length must be >= 2");
}

void add_to(SeqComb& acc, const Sequence& w, const CycQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

std::optional<std::size_t> first_rise(std::span<const int> s, int n) {
    check_n(n);
    if (s.size() < static_cast<std::size_t>(n)) return std::nullopt;
    std::size_t run = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        run = s[i - 1] <= s[i] ? run + 1 : 1;
        if (run >= static_cast<std::size_t>(n)) return i + 1 - static_cast<std::size_t>(n);
    }
    return std::nullopt;
}

bool has_rise(std::span<const int> s, int n) { return first_rise(s, n).has_value(); }

std::vector<Sequence> roby_basis(int d, int n, int k) {
    check_n(n);
    if (d < 1 || k < 0) throw std::invalid_argument("roby_basis: need d >= 1, k >= 0");
    std::vector<Sequence> out;
    Sequence cur;
    cur.reserve(static_cast<std::size_t>(k));
    // run = length of the non-decreasing run ending at the last letter
    auto rec = [&](auto&& self, int run) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int a = 1; a <= d; ++a) {
            int nrun = (!cur.empty() && cur.back() <= a) ? run + 1 : 1;
            if (nrun >= n) continue;
            cur.push_back(a);
            self(self, nrun);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

mpz_class roby_dim(int d, int n, int k) {
    check_n(n);
    if (d < 1 || k < 0) throw std::invalid_argument("roby_dim: need d >= 1, k >= 0");
    if (k == 0) return 1;
    // ways[a][r]: words ending in letter a whose final non-decreasing run has length r+1
    std::vector<std::vector<mpz_class>> ways(d + 1, std::vector<mpz_class>(n - 1, 0));
    for (int a = 1; a <= d; ++a) ways[a][0] = 1;
    for (int len = 1; len < k; ++len) {
        std::vector<std::vector<mpz_class>> next(d + 1, std::vector<mpz_class>(n - 1, 0));
        for (int a = 1; a <= d; ++a)
            for (int r = 0; r < n - 1; ++r) {
                if (ways[a][r] == 0) continue;
                for (int b = 1; b <= d; ++b) {
                    if (b < a)
                        next[b][0] += ways[a][r];
                    else if (r + 1 < n - 1)
                        next[b][r + 1] += ways[a][r];
                }
            }
        ways = std::move(next);
    }
    mpz_class total = 0;
    for (int a = 1; a <= d; ++a)
        for (int r = 0; r < n - 1; ++r) total += ways[a][r];
    return total;
}

SeqComb rewrite_rise(const Sequence& s, std::size_t pos, int n) {
    check_n(n);
    if (pos + static_cast<std::size_t>(n) > s.size() ||
        !std::is_sorted(s.begin() + static_cast<long>(pos), s.begin() + static_cast<long>(pos) + n))
        throw std::invalid_argument("rewrite_rise: no rise at the given position");
    SeqComb out;
    Sequence window(s.begin() + static_cast<long>(pos), s.begin() + static_cast<long>(pos) + n);
    Sequence w = s;
    // next_permutation from the sorted window visits each distinct rearrangement once
    while (std::next_permutation(window.begin(), window.end())) {
        std::copy(window.begin(), window.end(), w.begin() + static_cast<long>(pos));
        add_to(out, w, CycQ(-1));
    }
    return out;
}

SeqComb reduce_pure(const Sequence& s, int n) {
    check_n(n);
    std::map<Sequence, SeqComb> memo;
    auto rec = [&](auto&& self, const Sequence& w) -> const SeqComb& {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        SeqComb result;
        if (auto pos = first_rise(w, n)) {
            for (const auto& [v, c] : rewrite_rise(w, *pos, n))
                for (const auto& [u, cu] : self(self, v)) add_to(result, u, c * cu);
        } else {
            result.emplace(w, CycQ(1));
        }
        return memo.emplace(w, std::move(result)).first->second;
    };
    return rec(rec, s);
}

}  // namespace lie3
