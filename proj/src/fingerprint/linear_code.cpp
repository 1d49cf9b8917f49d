#include "meqsim/fingerprint/linear_code.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace meqsim::fingerprint {

LinearCode::LinearCode(std::vector<BitString> rows, int m) : rows_(std::move(rows)), m_(m) {
    if (m < 2 || !std::has_single_bit(static_cast<unsigned>(m))) {
        throw std::invalid_argument("LinearCode: m must be a power of two >= 2");
    }
    if (rows_.empty()) {
        throw std::invalid_argument("LinearCode: empty generator");
    }
    for (const BitString& r : rows_) {
        if (r.size() != m) {
            throw std::invalid_argument("LinearCode: generator row length != m");
        }
    }
    copy_width_ = std::countr_zero(static_cast<unsigned>(m));
}

BitString LinearCode::encode(const BitString& x) const {
    if (x.size() != n()) {
        throw std::invalid_argument("LinearCode::encode: message length mismatch");
    }
    BitString w(m_);
    for (int i = 0; i < n(); ++i) {
        if (x.bit(i)) w ^= rows_[static_cast<std::size_t>(i)];
    }
    return w;
}

bool LinearCode::weight_window_ok() const {
    if (n() > 20) {
        throw std::invalid_argument("weight_window_ok: n too large for exhaustive check");
    }
    // 4*weight in [m, 3m] avoids fractional bounds.
    const int lo = m_;
    const int hi = 3 * m_;
    // Gray-code walk: one row XOR per codeword.
    BitString word(m_);
    std::uint64_t prev = 0;
    const std::uint64_t count = std::uint64_t{1} << n();
    for (std::uint64_t v = 1; v < count; ++v) {
        std::uint64_t gray = v ^ (v >> 1);
        std::uint64_t changed = gray ^ prev;
        word ^= rows_[static_cast<std::size_t>(std::countr_zero(changed))];
        prev = gray;
        int w4 = 4 * word.weight();
        if (w4 < lo || w4 > hi) return false;
    }
    return true;
}

double LinearCode::inner(const BitString& x, const BitString& y) const {
    int d = hamming_distance(encode(x), encode(y));
    return 1.0 - 2.0 * static_cast<double>(d) / static_cast<double>(m_);
}

std::string LinearCode::serialize() const {
    std::ostringstream out;
    out << n() << ' ' << m_ << '\n';
    for (const BitString& r : rows_) {
        out << r.to_string() << '\n';
    }
    return out.str();
}

LinearCode LinearCode::parse(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m) || n < 1 || m < 2) {
        throw std::invalid_argument("LinearCode::parse: bad header");
    }
    std::vector<BitString> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string line;
        if (!(in >> line) || static_cast<int>(line.size()) != m) {
            throw std::invalid_argument("LinearCode::parse: bad generator row");
        }
        rows.push_back(BitString::from_string(line));
    }
    return LinearCode(std::move(rows), m);
}

LinearCode LinearCode::parse(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

LinearCode LinearCode::sample(int n, int m, Rng& rng, int max_attempts) {
    if (n < 1 || n > 20) {
        throw std::invalid_argument("LinearCode::sample: n out of range [1, 20]");
    }
    if (m < 4 || !std::has_single_bit(static_cast<unsigned>(m))) {
        throw std::invalid_argument("LinearCode::sample: m must be a power of two >= 4");
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<BitString> rows;
        rows.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            BitString row(m);
            for (int j = 0; j < m; ++j) {
                row.set_bit(j, uniform_bit(rng));
            }
            rows.push_back(std::move(row));
        }
        LinearCode code(std::move(rows), m);
        if (code.weight_window_ok()) return code;
    }
    throw std::runtime_error("LinearCode::sample: no valid code within " +
                             std::to_string(max_attempts) +
                             " attempts; increase m");
}

int LinearCode::default_width(int n) {
    int m = 4;
    while (m < 4 * n) m *= 2;
    return m;
}

LinearCode LinearCode::sample_default(int n, Rng& rng) {
    int m = default_width(n);
    for (;;) {
        try {
            return sample(n, m, rng);
        } catch (const std::runtime_error&) {
            m *= 2;
            if (m > 4096) throw;
        }
    }
}

} // namespace meqsim::fingerprint
