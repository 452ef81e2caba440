#include <doctest.h>

#include <numeric>

#include "fdns/errors.hpp"
#include "fdns/fdns.hpp"
#include "oracles.hpp"

using namespace fdns;

namespace {

FdnsParams small_params(int n = 9, int m = 3) {
    FdnsParams p;
    p.search_window = n;
    p.neighborhood_window = m;
    p.canonical_w = 64;
    p.canonical_h = 64;
    return p;
}

} // namespace

TEST_CASE("params validation") {
    CHECK_NOTHROW(small_params().validate());
    FdnsParams p = small_params(8, 3);
    CHECK_THROWS_AS(p.validate(), InvalidInput); // even N
    p = small_params(9, 4);
    CHECK_THROWS_AS(p.validate(), InvalidInput); // even M
    p = small_params(3, 3);
    CHECK_THROWS_AS(p.validate(), InvalidInput); // M must be < N
    p = small_params();
    p.canonical_w = 11; // needs >= N + M
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p = small_params();
    p.gaussian_kernel = 2;
    CHECK_THROWS_AS(p.validate(), InvalidInput);
    p = small_params();
    p.gaussian_sigma = 0.0;
    CHECK_THROWS_AS(p.validate(), InvalidInput);
}

TEST_CASE("fingerprint is a pure function of the parameter values") {
    const FdnsParams a = small_params();
    FdnsParams b = small_params();
    CHECK(a.fingerprint() == b.fingerprint());
    b.gaussian_sigma = 1.5;
    CHECK(a.fingerprint() != b.fingerprint());
    b = small_params();
    b.canonical_h = 128;
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(a.fingerprint_hex().size() == 16);
}

TEST_CASE("dns_at of a constant matrix is all zeros") {
    CoeffMatrix m(15, 15, 3.25);
    const DnsMap map = dns_at(m, 7, 7, small_params());
    for (double v : map.values) CHECK(v == 0.0);
}

TEST_CASE("dns_at center entry is exactly zero") {
    const CoeffMatrix m = oracle::random_matrix(15, 15, 11);
    const DnsMap map = dns_at(m, 7, 7, small_params());
    CHECK(map.at(4, 4) == 0.0);
}

TEST_CASE("dns_at matches the patch-materializing oracle") {
    const CoeffMatrix m = oracle::random_matrix(15, 15, 23);
    const DnsMap fast = dns_at(m, 7, 7, small_params());
    const DnsMap slow = oracle::dns_at_direct(m, 7, 7, 9, 3);
    CHECK(oracle::max_abs_diff(fast.values, slow.values) < 1e-12);
}

TEST_CASE("dns_at rejects centers whose window leaves the matrix") {
    const CoeffMatrix m = oracle::random_matrix(15, 15, 29);
    CHECK_THROWS_AS(dns_at(m, 4, 7, small_params()), OutOfBounds);
    CHECK_THROWS_AS(dns_at(m, 7, 10, small_params()), OutOfBounds);
    CHECK_NOTHROW(dns_at(m, 5, 9, small_params()));
}

TEST_CASE("fgns of a constant matrix is all zeros") {
    const DnsMap map = fgns(CoeffMatrix(20, 20, -7.0), small_params());
    for (double v : map.values) CHECK(v == 0.0);
}

TEST_CASE("fgns at the minimal size equals dns_at at the single center") {
    const CoeffMatrix m = oracle::random_matrix(11, 11, 31);
    const DnsMap whole = fgns(m, small_params());
    const DnsMap one = dns_at(m, 5, 5, small_params());
    CHECK(oracle::max_abs_diff(whole.values, one.values) < 1e-12);
}

TEST_CASE("fgns matches the center-major oracle") {
    const CoeffMatrix m = oracle::random_matrix(20, 20, 37);
    const DnsMap fast = fgns(m, small_params());
    const DnsMap slow = oracle::fgns_direct(m, 9, 3);
    CHECK(oracle::max_abs_diff(fast.values, slow.values) < 1e-9);

    // alternate window pair at map level
    const CoeffMatrix m2 = oracle::random_matrix(14, 17, 41);
    const DnsMap fast2 = fgns(m2, small_params(5, 3));
    const DnsMap slow2 = oracle::fgns_direct(m2, 5, 3);
    CHECK(oracle::max_abs_diff(fast2.values, slow2.values) < 1e-9);
}

TEST_CASE("fgns is independent of the center iteration order") {
    const CoeffMatrix m = oracle::random_matrix(18, 18, 43);
    const DnsMap fast = fgns(m, small_params());

    const int margin = 5;
    const int cells = (18 - 2 * margin) * (18 - 2 * margin);
    std::vector<int> order(cells);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(99);
    for (int i = cells - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    const DnsMap permuted = oracle::fgns_direct(m, 9, 3, &order);
    CHECK(oracle::max_abs_diff(fast.values, permuted.values) < 1e-9);
}

TEST_CASE("fgns rejects matrices smaller than one full window") {
    CHECK_THROWS_AS(fgns(CoeffMatrix(10, 20, 1.0), small_params()), InvalidInput);
    CHECK_THROWS_AS(fgns(CoeffMatrix(20, 10, 1.0), small_params()), InvalidInput);
    CHECK_NOTHROW(fgns(CoeffMatrix(11, 11, 1.0), small_params()));
}
