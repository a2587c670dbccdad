#include "deligne/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace deligne {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("partition rows must be nonnegative");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition Partition::transpose() const {
    std::vector<int> cols(rows_.empty() ? 0 : rows_.front(), 0);
    for (int r : rows_)
        for (int c = 0; c < r; ++c) ++cols[c];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const noexcept {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.row(i) > row(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out + "]";
}

std::string Bipartition::to_string() const {
    return "[" + black.to_string() + "," + white.to_string() + "]";
}

std::vector<int> addable_contents(const Partition& nu) {
    std::vector<int> out;
    for (int i = 1; i <= nu.length() + 1; ++i)
        if (i == 1 || nu.row(i - 1) > nu.row(i)) out.push_back(nu.row(i) + 1 - i);
    return out;
}

std::vector<int> removable_contents(const Partition& nu) {
    std::vector<int> out;
    for (int i = 1; i <= nu.length(); ++i)
        if (nu.row(i) > nu.row(i + 1)) out.push_back(nu.row(i) - i);
    return out;
}

std::optional<Partition> add_box(const Partition& nu, int content) {
    // The addable cell in row i has content nu_i + 1 - i; these are strictly
    // decreasing in i, so at most one row matches.
    for (int i = 1; i <= nu.length() + 1; ++i) {
        if (i > 1 && nu.row(i - 1) == nu.row(i)) continue;
        if (nu.row(i) + 1 - i != content) continue;
        std::vector<int> rows = nu.rows();
        if (i > nu.length()) rows.push_back(1);
        else ++rows[i - 1];
        return Partition(std::move(rows));
    }
    return std::nullopt;
}

std::optional<Partition> remove_box(const Partition& nu, int content) {
    for (int i = 1; i <= nu.length(); ++i) {
        if (nu.row(i) == nu.row(i + 1)) continue;
        if (nu.row(i) - i != content) continue;
        std::vector<int> rows = nu.rows();
        --rows[i - 1];
        return Partition(std::move(rows));
    }
    return std::nullopt;
}

int n_weight(const Partition& nu, int content) {
    if (add_box(nu, content)) return 1;
    if (remove_box(nu, content)) return -1;
    return 0;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> bipartitions_up_to(int max_size) {
    std::vector<std::vector<Partition>> by_size;
    for (int n = 0; n <= max_size; ++n) by_size.push_back(partitions_of(n));
    std::vector<Bipartition> out;
    for (int total = 0; total <= max_size; ++total)
        for (int b = 0; b <= total; ++b)
            for (const auto& black : by_size[b])
                for (const auto& white : by_size[total - b]) out.push_back({black, white});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> bipartition_neighbors(const Bipartition& lambda, std::optional<int> content,
                                               BoxMove kind) {
    if (!content) return {};
    std::optional<Partition> moved;
    switch (kind) {
        case BoxMove::BlackAdd: moved = add_box(lambda.black, *content); break;
        case BoxMove::BlackRemove: moved = remove_box(lambda.black, *content); break;
        case BoxMove::WhiteAdd: moved = add_box(lambda.white, *content); break;
        case BoxMove::WhiteRemove: moved = remove_box(lambda.white, *content); break;
    }
    if (!moved) return {};
    if (kind == BoxMove::BlackAdd || kind == BoxMove::BlackRemove) return {{*moved, lambda.white}};
    return {{lambda.black, *moved}};
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    bool done() const { return pos_ == s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer() {
        std::size_t start = pos_;
        while (!done() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
        int value = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, value);
        if (ec != std::errc() || ptr != s_.data() + pos_ || start == pos_) {
            pos_ = start;
            fail("expected an integer");
        }
        return value;
    }

    Partition partition() {
        expect('[');
        std::vector<int> rows;
        if (peek() != ']') {
            rows.push_back(integer());
            while (peek() == ',') {
                ++pos_;
                rows.push_back(integer());
            }
        }
        expect(']');
        try {
            return Partition(std::move(rows));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), s_);
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string token = done() ? std::string("<end of input>") : s_.substr(pos_);
        throw ParseError(what + " at '" + token + "' in '" + s_ + "'", token);
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
    Cursor cur(text);
    Partition p = cur.partition();
    if (!cur.done()) cur.fail("trailing input");
    return p;
}

Bipartition parse_bipartition(std::string_view text) {
    Cursor cur(text);
    cur.expect('[');
    Partition black = cur.partition();
    cur.expect(',');
    Partition white = cur.partition();
    cur.expect(']');
    if (!cur.done()) cur.fail("trailing input");
    return {std::move(black), std::move(white)};
}

}  // namespace deligne
