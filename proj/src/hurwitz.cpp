#include "hcn/hurwitz.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace hcn {

std::int64_t HurwitzTable::twelve_h(std::int64_t N) const {
    if (N < 0 || N > n_max)
        throw std::out_of_range("HurwitzTable: N=" + std::to_string(N) + " outside [0," +
                                std::to_string(n_max) + "]");
    return values12[(std::size_t)N];
}

namespace {

// 12 * weight * multiplicity for the reduced form (a, b, c), 0 <= b <= a <= c.
// Interior b (0 < b < a < c) stands for the two reduced forms (a, +-b, c).
std::int64_t form_weight12(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (b == 0 && a == c) return 6;             // multiple of x^2 + y^2
    if (a == b && b == c) return 4;             // multiple of x^2 + xy + y^2
    if (b > 0 && b < a && a < c) return 24;
    return 12;
}

}  // namespace

Rational hurwitz_single(std::int64_t N) {
    if (N < 0) throw std::invalid_argument("hurwitz_single needs N >= 0");
    if (N == 0) return Rational(-1, 12);
    if (N % 4 == 1 || N % 4 == 2) return Rational(0);
    std::int64_t total12 = 0;
    for (std::int64_t a = 1; 3 * a * a <= N; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            std::int64_t num = N + b * b;  // 4ac
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            total12 += form_weight12(a, b, c);
        }
    }
    return Rational(total12, 12);
}

namespace {

// Accumulates every discriminant hit by the a-range [a_lo, a_hi] into out.
void sieve_a_range(std::int64_t n_max, std::int64_t a_lo, std::int64_t a_hi, std::int64_t a_step,
                   std::vector<std::int64_t>& out) {
    for (std::int64_t a = a_lo; a <= a_hi; a += a_step) {
        for (std::int64_t b = 0; b <= a; ++b) {
            std::int64_t c_max = (n_max + b * b) / (4 * a);
            std::int64_t N = 4 * a * a - b * b;  // value at c = a
            for (std::int64_t c = a; c <= c_max; ++c, N += 4 * a) {
                out[(std::size_t)N] += form_weight12(a, b, c);
            }
        }
    }
}

}  // namespace

HurwitzTable hurwitz_table(std::int64_t n_max, int workers) {
    if (n_max < 0) throw std::invalid_argument("hurwitz_table needs n_max >= 0");
    if ((std::uint64_t)n_max + 1 > (std::uint64_t)1 << 32)
        throw std::invalid_argument("hurwitz_table: n_max too large for a dense table");
    if (workers < 1) workers = 1;

    HurwitzTable table;
    table.n_max = n_max;
    table.values12.assign((std::size_t)n_max + 1, 0);
    table.values12[0] = -1;  // 12 * H(0)

    std::int64_t a_max = isqrt(n_max / 3);
    if (workers == 1 || a_max < 2 * workers) {
        sieve_a_range(n_max, 1, a_max, 1, table.values12);
        return table;
    }

    // Strided a-assignment balances work; private accumulators merge by
    // elementwise addition, so the result is identical for any worker count.
    std::vector<std::vector<std::int64_t>> partial(
        (std::size_t)workers, std::vector<std::int64_t>((std::size_t)n_max + 1, 0));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] { sieve_a_range(n_max, 1 + w, a_max, workers, partial[(std::size_t)w]); });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial)
        for (std::size_t i = 0; i <= (std::size_t)n_max; ++i) table.values12[i] += part[i];
    return table;
}

void save_table(const HurwitzTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "HURWITZ12 1 " << table.n_max << "\n";
    for (std::int64_t N = 0; N <= table.n_max; ++N)
        out << N << " " << table.values12[(std::size_t)N] << "\n";
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

[[noreturn]] void format_error(const std::string& path, std::int64_t line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(const std::string& tok, const std::string& path, std::int64_t line) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        format_error(path, line, "expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

HurwitzTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);

    std::string line;
    if (!std::getline(in, line)) format_error(path, 1, "empty file, expected HURWITZ12 header");
    std::int64_t n_max = -1;
    {
        std::string magic, version, nmax_tok;
        std::size_t s1 = line.find(' ');
        std::size_t s2 = s1 == std::string::npos ? std::string::npos : line.find(' ', s1 + 1);
        if (s1 == std::string::npos || s2 == std::string::npos)
            format_error(path, 1, "malformed header '" + line + "'");
        magic = line.substr(0, s1);
        version = line.substr(s1 + 1, s2 - s1 - 1);
        nmax_tok = line.substr(s2 + 1);
        if (magic != "HURWITZ12") format_error(path, 1, "bad magic '" + magic + "'");
        if (version != "1") format_error(path, 1, "unsupported version '" + version + "'");
        n_max = parse_int(nmax_tok, path, 1);
        if (n_max < 0) format_error(path, 1, "negative n_max");
    }

    HurwitzTable table;
    table.n_max = n_max;
    table.values12.reserve((std::size_t)n_max + 1);
    std::int64_t expect_N = 0;
    std::int64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && expect_N > n_max) break;  // tolerate one trailing newline
        std::size_t sp = line.find(' ');
        if (sp == std::string::npos) format_error(path, line_no, "expected '<N> <12H>' pair");
        std::int64_t N = parse_int(line.substr(0, sp), path, line_no);
        std::int64_t v = parse_int(line.substr(sp + 1), path, line_no);
        if (N != expect_N)
            format_error(path, line_no,
                         "expected N=" + std::to_string(expect_N) + ", got " + std::to_string(N));
        table.values12.push_back(v);
        ++expect_N;
    }
    if (expect_N != n_max + 1)
        format_error(path, line_no + 1,
                     "truncated body: has " + std::to_string(expect_N) + " of " +
                         std::to_string(n_max + 1) + " entries");
    return table;
}

}  // namespace hcn
