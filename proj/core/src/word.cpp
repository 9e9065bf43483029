#include "ucn/word.hpp"

#include <string>

namespace ucn {

namespace {

void check_rank(int rank) {
    if (rank < 1) throw InvalidRank("word rank must be >= 1");
}

std::vector<int> normalize(int rank, std::vector<int> letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int g : letters) {
        if (g < 1 || g > rank)
            throw IndexError("letter " + std::to_string(g) + " out of range 1.." +
                             std::to_string(rank));
        if (!out.empty() && out.back() == g) out.pop_back(); // t_g^2 = 1
        else out.push_back(g);
    }
    return out;
}

} // namespace

ReducedWord::ReducedWord(int rank) : rank_(rank) { check_rank(rank); }

ReducedWord::ReducedWord(int rank, std::vector<int> letters) : rank_(rank) {
    check_rank(rank);
    letters_ = normalize(rank, std::move(letters));
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
    if (rank_ != rhs.rank_) throw RankError("word product across different ranks");
    std::vector<int> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return ReducedWord(rank_, std::move(cat));
}

ReducedWord ReducedWord::inverse() const {
    std::vector<int> rev(letters_.rbegin(), letters_.rend());
    ReducedWord out(rank_);
    out.letters_ = std::move(rev); // reversal of a reduced word is reduced
    return out;
}

void for_each_reduced_word(int rank, int max_len,
                           const std::function<void(const std::vector<int>&)>& visit) {
    check_rank(rank);
    std::vector<int> w;
    visit(w);
    // Frontier by length; extending in letter order keeps each length block
    // lexicographically sorted.
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        next.reserve(frontier.size() * static_cast<std::size_t>(rank));
        for (const auto& base : frontier) {
            for (int g = 1; g <= rank; ++g) {
                if (!base.empty() && base.back() == g) continue;
                std::vector<int> child = base;
                child.push_back(g);
                visit(child);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }
}

} // namespace ucn
