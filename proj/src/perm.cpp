#include "eg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eg/errors.hpp"

namespace eg {

Permutation::Permutation(int window_lo, std::vector<int> images)
    : lo_(window_lo), img_(std::move(images)) {
    // Check the window is permuted onto itself.
    std::vector<int> sorted = img_;
    std::sort(sorted.begin(), sorted.end());
    for (size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != lo_ + static_cast<int>(k))
            throw ParseError("one-line notation is not a permutation of its window");
    }
    // Trim fixed points at both ends.
    size_t b = 0, e = img_.size();
    while (b < e && img_[b] == lo_ + static_cast<int>(b)) ++b;
    while (e > b && img_[e - 1] == lo_ + static_cast<int>(e) - 1) --e;
    img_ = std::vector<int>(img_.begin() + static_cast<long>(b),
                            img_.begin() + static_cast<long>(e));
    lo_ += static_cast<int>(b);
    if (img_.empty()) lo_ = 0;
}

Permutation Permutation::transposition(int i, int j) {
    if (i == j) return {};
    if (i > j) std::swap(i, j);
    std::vector<int> img(static_cast<size_t>(j - i + 1));
    std::iota(img.begin(), img.end(), i);
    img.front() = j;
    img.back() = i;
    return Permutation(i, std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (size_t k = 0; k < img_.size(); ++k)
        img[static_cast<size_t>(img_[k] - lo_)] = lo_ + static_cast<int>(k);
    return Permutation(lo_, std::move(img));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.is_identity()) return v;
    if (v.is_identity()) return u;
    int lo = std::min(u.lo_, v.lo_);
    int hi = std::max(u.window_hi(), v.window_hi());
    std::vector<int> img(static_cast<size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) img[static_cast<size_t>(i - lo)] = u(v(i));
    return Permutation(lo, std::move(img));
}

long Permutation::length() const {
    long inv = 0;
    for (size_t a = 0; a < img_.size(); ++a)
        for (size_t b = a + 1; b < img_.size(); ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

std::set<int> Permutation::descents() const {
    std::set<int> des;
    int hi = window_hi();
    for (int i = lo_ - 1; i <= hi; ++i)
        if ((*this)(i) > (*this)(i + 1)) des.insert(i);
    return des;
}

int Permutation::max_descent_or(int fallback) const {
    auto des = descents();
    return des.empty() ? fallback : *des.rbegin();
}

bool Permutation::supported_in(int a, int n) const {
    return is_identity() || (lo_ >= a && window_hi() <= n);
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < img_.size(); ++k) {
        if (k) os << ',';
        os << img_[k];
    }
    os << "]@" << lo_;
    return os.str();
}

Permutation Permutation::parse(const std::string& text) {
    auto open = text.find('[');
    auto close = text.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("expected one-line notation \"[v1,...,vk]@a\": " + text);
    std::string body = text.substr(open + 1, close - open - 1);
    int lo = 0;
    auto at = text.find('@', close);
    if (at != std::string::npos) {
        try {
            lo = std::stoi(text.substr(at + 1));
        } catch (const std::exception&) {
            throw ParseError("bad window start in: " + text);
        }
    }
    std::vector<int> img;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            img.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad entry '" + tok + "' in: " + text);
        }
    }
    return Permutation(lo, std::move(img));
}

Permutation neg(const Permutation& w) {
    if (w.is_identity()) return w;
    int lo = 1 - w.window_hi(), hi = 1 - w.window_lo();
    std::vector<int> img(static_cast<size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) img[static_cast<size_t>(i - lo)] = 1 - w(1 - i);
    return Permutation(lo, std::move(img));
}

Permutation standardize(const Permutation& w, int a, int n) {
    if (!w.supported_in(a, n))
        throw DescentPrecondition("standardize: permutation moves a point outside [" +
                                  std::to_string(a) + "," + std::to_string(n) + "]");
    std::vector<int> img(static_cast<size_t>(n - a + 1));
    for (int i = 1; i <= n - a + 1; ++i)
        img[static_cast<size_t>(i - 1)] = w(i + a - 1) - a + 1;
    return Permutation(1, std::move(img));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u == w) return true;
    if (u.length() >= w.length()) return false;
    int lo = std::min(u.window_lo(), w.window_lo());
    int hi = std::max(u.window_hi(), w.window_hi());
    // u <= w iff #{t <= i : u(t) >= j} <= #{t <= i : w(t) >= j} for all i, j.
    for (int i = lo; i <= hi; ++i) {
        for (int j = lo; j <= hi; ++j) {
            int cu = 0, cw = 0;
            for (int t = lo; t <= i; ++t) {
                if (u(t) >= j) ++cu;
                if (w(t) >= j) ++cw;
            }
            if (cu > cw) return false;
        }
    }
    return true;
}

bool decreasing_on(const Permutation& w, int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (w(i) < w(i + 1)) return false;
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0 || (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]))
            throw ParseError("parts must be weakly decreasing positive integers");
    }
}

long Partition::size() const {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<size_t>(parts_[0]));
    for (int i = 1; i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        out[static_cast<size_t>(i - 1)] = count;
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (k) os << ',';
        os << parts_[k];
    }
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            parts.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad partition entry '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

namespace {
void partitions_rec(int remaining, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        acc.push_back(next);
        partitions_rec(remaining - next, next, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    return out;
}

Permutation grassmannian_of_partition(const Partition& lambda) {
    if (lambda.empty()) return {};
    int rows = lambda.rows();
    int lo = 1 - rows;                       // below lo everything is fixed
    int hi = lambda.part(1);                 // w(0) = lambda_1; values up to it
    std::vector<int> img(static_cast<size_t>(hi - lo + 1));
    std::set<int> used;
    for (int i = lo; i <= 0; ++i) {
        int v = i + lambda.part(1 - i);
        img[static_cast<size_t>(i - lo)] = v;
        used.insert(v);
    }
    int next = lo;
    for (int i = 1; i <= hi; ++i) {
        while (used.count(next)) ++next;
        img[static_cast<size_t>(i - lo)] = next;
        used.insert(next);
    }
    return Permutation(lo, std::move(img));
}

Partition partition_of_grassmannian(const Permutation& w) {
    auto des = w.descents();
    if (!des.empty() && (des.size() > 1 || *des.begin() != 0))
        throw DescentPrecondition("not 0-Grassmannian: " + w.to_string());
    std::vector<int> parts;
    for (int i = 0; i >= w.window_lo() - 1; --i) {
        int p = w(i) - i;
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace eg
