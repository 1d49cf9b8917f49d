#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "meqsim/bits.hpp"
#include "meqsim/rng.hpp"

namespace meqsim::fingerprint {

// F2-linear map E from n-bit messages to m-bit codewords, m a power of two.
// Row i of the generator is the image of the i-th standard basis vector.
// The fingerprint family built on top needs every nonzero codeword to have
// Hamming weight in [m/4, 3m/4]; that window keeps the pairwise inner
// product of distinct fingerprints within [-1/2, 1/2].
class LinearCode {
public:
    LinearCode(std::vector<BitString> rows, int m);

    int n() const { return static_cast<int>(rows_.size()); }
    int m() const { return m_; }
    // Qubits per fingerprint copy, log2(m).
    int copy_width() const { return copy_width_; }
    const std::vector<BitString>& rows() const { return rows_; }

    // XOR of the generator rows selected by the set bits of x.
    BitString encode(const BitString& x) const;

    // Exhaustively checks the nonzero-codeword weight window. Requires
    // n <= 20.
    bool weight_window_ok() const;

    // 1 - 2*d(E(x), E(y))/m: the inner product of the fingerprints of x
    // and y. Equals 1 iff x == y; within [-1/2, 1/2] otherwise when the
    // weight window holds.
    double inner(const BitString& x, const BitString& y) const;

    // Text format: "n m" on the first line, then n generator rows of m
    // characters in {0,1}.
    std::string serialize() const;
    static LinearCode parse(std::istream& in);
    static LinearCode parse(const std::string& text);

    // Rejection-samples random generators until the weight window holds.
    // Requires m power of two >= 4, n <= 20. Throws if max_attempts random
    // generators all fail.
    static LinearCode sample(int n, int m, Rng& rng, int max_attempts = 1000);

    // Smallest power of two >= 4n, at least 4.
    static int default_width(int n);

    // sample() at default_width(n), doubling m on failure.
    static LinearCode sample_default(int n, Rng& rng);

private:
    std::vector<BitString> rows_;
    int m_;
    int copy_width_;
};

} // namespace meqsim::fingerprint
