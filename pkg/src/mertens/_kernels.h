/* Hot loops for the mertens package.
 *
 * All arguments are below 2^62; intermediates that can grow past 64 bits use
 * __int128.  Products whose size depends on the neighborhood go through
 * mul_chk, which raises *ovf instead of wrapping; callers then fall back to
 * arbitrary-precision code.
 */
#ifndef MERTENS_KERNELS_H
#define MERTENS_KERNELS_H

#include <stdint.h>
#include <stdlib.h>
#include <string.h>
#include <math.h>

typedef __int128 i128;
typedef unsigned __int128 u128;

#define I128_MAX ((i128)(((u128)1 << 127) - 1))
#define I128_MIN (-I128_MAX - 1)

static inline void split128(i128 v, int64_t *hi, uint64_t *lo)
{
    *hi = (int64_t)(v >> 64);
    *lo = (uint64_t)v;
}

static inline i128 join128(int64_t hi, uint64_t lo)
{
    return (i128)(((u128)(uint64_t)hi << 64) | lo);
}

static inline i128 mul_chk(i128 a, i128 b, int *ovf)
{
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        *ovf = 1;
        return 0;
    }
    return r;
}

static inline i128 add_chk(i128 a, i128 b, int *ovf)
{
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        *ovf = 1;
        return 0;
    }
    return r;
}

/* floor and ceiling of a/b for any signs, b != 0 */
static inline i128 floordiv128(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q--;
    return q;
}

static inline i128 ceildiv128(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        q++;
    return q;
}

static inline int64_t floordiv64(int64_t a, int64_t b)
{
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q--;
    return q;
}

static inline int64_t mod64(int64_t a, int64_t q)
{
    int64_t r = a % q;
    return r < 0 ? r + q : r;
}

static inline int sgn128(i128 v) { return (v > 0) - (v < 0); }

/* largest r with r*r <= n, 0 <= n < 2^127 */
static inline u128 isqrt128(u128 n)
{
    if (n < 2)
        return n;
    u128 r = (u128)sqrtl((long double)n);
    if (r > 0)
        r = (r + n / r) >> 1;
    while (r > 0 && (r > ((u128)1 << 64) - 1 || r * r > n))
        r--;
    while (r + 1 <= ((u128)1 << 64) - 1 && (r + 1) * (r + 1) <= n)
        r++;
    return r;
}

static inline int64_t isqrt64(int64_t n)
{
    return (int64_t)isqrt128((u128)n);
}

static inline int bitlen64(uint64_t v) { return v ? 64 - __builtin_clzll(v) : 0; }

/* smallest k with 4^k >= n */
static inline int ceil_log4(uint64_t n) { return (bitlen64(n - 1) + 1) >> 1; }

/* ------------------------------------------------------------------ sieves */

/* Sieve state for n0..n0+delta in one byte per entry: bit 7 is the parity
 * of the number of sieved primes, bit 6 flags a square factor p^2, bits 0-5
 * hold the sum of ceil(log4 p) over sieved p (at most 62, so no carry).  A
 * squarefree n whose sum is below ceil(log4 n) has one more prime factor
 * above sqrt(n).  Primes 2, 3, 5, 7 and squares 4, 9 repeat with period
 * 1260 and are copied from a pattern. */
#define WHEEL_L 1260

static void k_sieve_state(int64_t n0, int64_t delta, const int64_t *primes, int64_t np,
                          uint8_t *st)
{
    int64_t top = n0 + delta;
    uint8_t pat[WHEEL_L];
    static const int64_t small[4] = {2, 3, 5, 7};
    int64_t i = 0;
    memset(pat, 0, sizeof pat);
    for (int k = 0; k < 4; k++) {
        uint8_t add = (uint8_t)(0x80 + ceil_log4((uint64_t)small[k]));
        for (int j = 0; j < WHEEL_L; j += (int)small[k])
            pat[j] += add;
    }
    for (int j = 0; j < WHEEL_L; j += 4)
        pat[j] |= 0x40;
    for (int j = 0; j < WHEEL_L; j += 9)
        pat[j] |= 0x40;
    /* the pattern applies only where the sieve would use those primes */
    int wheel = np >= 4 && top >= 49 && primes[0] == 2 && primes[3] == 7;
    if (wheel) {
        int64_t off = n0 % WHEEL_L, j = 0;
        while (j <= delta) {
            int64_t len = WHEEL_L - off;
            if (len > delta + 1 - j)
                len = delta + 1 - j;
            memcpy(st + j, pat + off, (size_t)len);
            j += len;
            off = 0;
        }
        i = 4;
        for (int64_t sq = 25; sq <= 49; sq += 24)
            for (int64_t j2 = ((n0 + sq - 1) / sq) * sq - n0; j2 <= delta; j2 += sq)
                st[j2] |= 0x40;
    } else {
        memset(st, 0, (size_t)(delta + 1));
    }
    for (; i < np; i++) {
        int64_t p = primes[i];
        if (p * p > top)
            break;
        uint8_t add = (uint8_t)(0x80 + ceil_log4((uint64_t)p));
        for (int64_t j = ((n0 + p - 1) / p) * p - n0; j <= delta; j += p)
            st[j] += add;
        if (!wheel || p > 7) {
            int64_t p2 = p * p;
            for (int64_t j = ((n0 + p2 - 1) / p2) * p2 - n0; j <= delta; j += p2)
                st[j] |= 0x40;
        }
    }
}

static inline int mu_from_state(uint8_t s, int t)
{
    int odd = (s >> 7) ^ ((s & 0x3F) < t);
    return (s & 0x40) ? 0 : 1 - 2 * odd;
}

static void k_mu_window(int64_t n0, int64_t delta, const int64_t *primes, int64_t np,
                        int8_t *mu, uint8_t *st)
{
    k_sieve_state(n0, delta, primes, np, st);
    for (int64_t j = 0; j <= delta; j++)
        mu[j] = (int8_t)mu_from_state(st[j], ceil_log4((uint64_t)(n0 + j)));
}

/* sum of mu over a window, with ceil(log4 n) updated only at powers of 4 */
static int64_t window_sum(int64_t n0, int64_t delta, const uint8_t *st)
{
    int64_t total = 0, j = 0;
    while (j <= delta) {
        int t = ceil_log4((uint64_t)(n0 + j));
        /* n with ceil_log4(n) == t run up to 4^t */
        int64_t end = (t >= 31) ? delta : (((int64_t)1 << (2 * t)) - n0);
        if (end > delta)
            end = delta;
        for (; j <= end; j++)
            total += mu_from_state(st[j], t);
    }
    return total;
}

static int64_t k_mertens_range(int64_t n0, int64_t n1, const int64_t *primes, int64_t np)
{
    int64_t seg = isqrt64(n1);
    if (seg < (1 << 18))
        seg = 1 << 18;
    uint8_t *st = (uint8_t *)malloc((size_t)seg);
    int64_t total = 0;
    for (int64_t lo = n0; lo <= n1; lo += seg) {
        int64_t hi = lo + seg - 1 < n1 ? lo + seg - 1 : n1;
        k_sieve_state(lo, hi - lo, primes, np, st);
        total += window_sum(lo, hi - lo, st);
    }
    free(st);
    return total;
}

/* -------------------------------------------------- truncated divisor sums */

/* D over the squarefree divisors built from pr[0..k): m is the divisor so
 * far, mp the product of the primes left out; threshold is X/R. */
static int64_t subfactsm(const int64_t *pr, int k, i128 m, i128 mp, i128 X, i128 R, i128 n)
{
    if (m * R > X)
        return 0;
    if (k == 0)
        return 1;
    if (mp * X >= n * R)
        return 0;
    int64_t p = pr[k - 1];
    return subfactsm(pr, k - 1, m, mp * p, X, R, n) - subfactsm(pr, k - 1, m * p, mp, X, R, n);
}

/* D(r; x/r) for r0 <= r <= r0 + delta.  Distinct prime factors are kept in
 * the two-bitstring encoding: for p with k = floor(log2 p), a gets a marker
 * at the top of a k-bit field and b gets p - 2^k. */
static void k_d_values(int64_t x, int64_t r0, int64_t delta, const int64_t *primes, int64_t np,
                       int64_t *out)
{
    int64_t top = r0 + delta;
    size_t sz = (size_t)(delta + 1);
    uint64_t *A = (uint64_t *)calloc(sz, sizeof(uint64_t));
    uint64_t *B = (uint64_t *)calloc(sz, sizeof(uint64_t));
    uint64_t *Pi = (uint64_t *)malloc(sz * sizeof(uint64_t));
    for (size_t j = 0; j < sz; j++)
        Pi[j] = 1;
    for (int64_t i = 0; i < np; i++) {
        int64_t p = primes[i];
        if (p * p > top)
            break;
        int k = bitlen64((uint64_t)p) - 1;
        uint64_t mark = (uint64_t)1 << (k - 1);
        uint64_t low = (uint64_t)p - ((uint64_t)1 << k);
        int64_t j = ((r0 + p - 1) / p) * p - r0;
        for (; j <= delta; j += p) {
            A[j] = (A[j] << k) | mark;
            B[j] = (B[j] << k) | low;
            Pi[j] *= (uint64_t)p;
        }
        int64_t d = p;
        while (d <= top / p) {
            d *= p;
            for (j = ((r0 + d - 1) / d) * d - r0; j <= delta; j += d)
                Pi[j] *= (uint64_t)p;
        }
    }
    int64_t pr[64];
    for (int64_t j = 0; j <= delta; j++) {
        int64_t r = r0 + j;
        int64_t rest = r / (int64_t)Pi[j];
        int cnt = 0;
        uint64_t a = A[j], b = B[j];
        /* decode largest-first, then reverse into ascending order */
        int64_t tmp[64];
        while (a) {
            int k = __builtin_ctzll(a) + 1;
            tmp[cnt++] = (int64_t)(((uint64_t)1 << k) | (b & (((uint64_t)1 << k) - 1)));
            a >>= k;
            b >>= k;
        }
        int64_t rad = 1;
        for (int t = 0; t < cnt; t++) {
            pr[t] = tmp[cnt - 1 - t];
            rad *= pr[t];
        }
        if (rest > 1) {
            pr[cnt++] = rest;
            rad *= rest;
        }
        out[j] = subfactsm(pr, cnt, 1, 1, x, r, rad);
    }
    free(A);
    free(B);
    free(Pi);
}

/* --------------------------------------------------- the non-free n loop */

static int64_t k_nonfree_scan(int64_t x, int64_t n, int64_t v, const int8_t *mu, int64_t mu_base,
                              const int64_t *S, int64_t slen, int64_t r0, i128 *sigma, i128 *total)
{
    int64_t rmax = r0 + slen - 1;
    i128 sg = *sigma, tot = *total;
    while (n > v && n >= mu_base) {
        int64_t t = x / n;
        if (t > rmax)
            break;
        int m = mu[n - mu_base];
        if (m) {
            int64_t x2 = x / (n * n);
            sg += (i128)m * x2;
            tot += (i128)(2 * m) * ((i128)S[t - r0] - sg) + x2;
        }
        n--;
    }
    *sigma = sg;
    *total = tot;
    return n;
}

/* ------------------------------------------------------- brute rectangles */

static i128 k_brute_block(int64_t x, int64_t m0, int64_t n0, const int8_t *f, int64_t lf,
                          const int8_t *g, int64_t lg)
{
    i128 total = 0;
    for (int64_t i = 0; i < lf; i++) {
        if (!f[i])
            continue;
        int64_t xm = x / (m0 + i);
        i128 row = 0;
        /* floor(x/(mn)) = floor(floor(x/m)/n) */
        for (int64_t j = 0; j < lg; j++)
            if (g[j])
                row += g[j] * (xm / (n0 + j));
        total += f[i] * row;
    }
    return total;
}

/* ------------------------------------------- neighborhoods: exact algebra */

typedef struct {
    int empty;
    int has_lo, has_hi;
    i128 lo, hi;
} ival;

static inline ival iv_all(void) { ival r = {0, 0, 0, 0, 0}; return r; }
static inline ival iv_empty(void) { ival r = {1, 0, 0, 0, 0}; return r; }
static inline ival iv_ge(i128 lo) { ival r = {0, 1, 0, lo, 0}; return r; }
static inline ival iv_le(i128 hi) { ival r = {0, 0, 1, 0, hi}; return r; }
static inline ival iv_closed(i128 lo, i128 hi)
{
    if (lo > hi)
        return iv_empty();
    ival r = {0, 1, 1, lo, hi};
    return r;
}

static inline ival iv_and(ival s, ival t)
{
    if (s.empty || t.empty)
        return iv_empty();
    ival r = {0, s.has_lo || t.has_lo, s.has_hi || t.has_hi, 0, 0};
    if (s.has_lo && t.has_lo)
        r.lo = s.lo > t.lo ? s.lo : t.lo;
    else
        r.lo = s.has_lo ? s.lo : t.lo;
    if (s.has_hi && t.has_hi)
        r.hi = s.hi < t.hi ? s.hi : t.hi;
    else
        r.hi = s.has_hi ? s.hi : t.hi;
    if (r.has_lo && r.has_hi && r.lo > r.hi)
        return iv_empty();
    return r;
}

static inline ival iv_complement_ray(ival s)
{
    if (s.empty)
        return iv_all();
    if (!s.has_lo && !s.has_hi)
        return iv_empty();
    if (!s.has_lo)
        return iv_ge(s.hi + 1);
    return iv_le(s.lo - 1);
}

static inline ival iv_shift(ival s, i128 t)
{
    if (!s.empty) {
        s.lo += t;
        s.hi += t;
    }
    return s;
}

/* integers with A n^2 + B n + C < 0 (A > 0) or >= 0 (A < 0) */
static ival quad_ineq(i128 A, i128 B, i128 C, int *ovf)
{
    i128 bb = mul_chk(B, B, ovf);
    i128 ac = mul_chk(mul_chk(4, A, ovf), C, ovf);
    i128 disc;
    if (*ovf || __builtin_sub_overflow(bb, ac, &disc)) {
        *ovf = 1;
        return iv_empty();
    }
    if (disc < 0)
        return iv_empty();
    i128 s = (i128)isqrt128((u128)disc);
    i128 lo, hi;
    if (A > 0) {
        i128 den = 2 * A;
        if (s * s != disc) {
            lo = ceildiv128(-B - s, den);
            hi = floordiv128(-B + s, den);
        } else {
            lo = floordiv128(-B - s, den) + 1;
            hi = ceildiv128(-B + s, den) - 1;
        }
    } else {
        i128 den = -2 * A;
        lo = ceildiv128(B - s, den);
        hi = floordiv128(B + s, den);
    }
    return iv_closed(lo, hi);
}

/* sum of g(n) over n in I, -b <= n < b, n = r mod q; G holds class prefix sums */
static inline int64_t sum_inter(const int64_t *G, int64_t r, ival I, int64_t b, int64_t q)
{
    if (I.empty)
        return 0;
    int64_t hi = b - 1;
    if (I.has_hi && I.hi < hi)
        hi = (I.hi < -b - 1) ? -b - 1 : (int64_t)I.hi;
    int64_t r1 = hi - mod64(hi - r, q);
    if (r1 < -b)
        return 0;
    if (!I.has_lo || I.lo <= -b)
        return G[r1 + b];
    if (I.lo > b)
        return 0;
    int64_t lo = (int64_t)I.lo;
    int64_t r0 = (lo - 1) - mod64(lo - 1 - r, q);
    if (r0 > r1)
        return 0;
    if (r0 >= -b)
        return G[r1 + b] - G[r0 + b];
    return G[r1 + b];
}

typedef struct {
    i128 a0, a0_inv, q;
    int s;
} dioph;

/* continued fraction of num/den (den > 0) until the denominator passes Q */
static dioph dioph_appr(i128 num, i128 den, i128 Q)
{
    dioph out;
    i128 b = floordiv128(num, den);
    i128 p = b, q = 1, pm = 1, qm = 0;
    int s = 1;
    while (q <= Q) {
        i128 rem = num - b * den;
        if (rem == 0) {
            out.a0 = p;
            out.q = q;
            out.a0_inv = ((-s * qm) % q + q) % q;
            out.s = 0;
            return out;
        }
        num = den;
        den = rem;
        b = num / den;
        i128 pp = b * p + pm, qq = b * q + qm;
        pm = p;
        qm = q;
        p = pp;
        q = qq;
        s = -s;
    }
    out.a0 = pm;
    out.q = qm;
    out.a0_inv = ((s * q) % qm + qm) % qm;
    out.s = -s;
    return out;
}

static inline ival J_interval(int sb, int sd, i128 Qf, i128 Qc)
{
    if (sd > 0)
        return iv_le(-Qf - 1);
    if (sd < 0)
        return iv_ge(-Qc + 1);
    return sb < 0 ? iv_all() : iv_empty();
}

/* Sum of f(m) g(n) floor(x/((mc+m)(nc+n))) over [-a,a) x [-b,b).
 * work must hold 6b + 2 int64.  Returns nonzero on overflow. */
static int k_sum_by_lin(const int8_t *f, const int8_t *g, int64_t x, int64_t mc, int64_t nc,
                        int64_t a, int64_t b, int64_t *work, i128 *result)
{
    int ovf = 0;
    i128 X = x, MC = mc, NC = nc;
    i128 D1 = MC * MC * NC;        /* denominator of R0 */
    i128 D2 = MC * NC * NC;        /* denominator of alpha2 */
    i128 S1 = 0, S10 = 0, S2 = 0, S20 = 0;
    for (int64_t i = 0; i < 2 * a; i++)
        if (f[i]) {
            S1 += (i128)f[i] * floordiv128(X * (MC - (i - a)), D1);
            S10 += f[i];
        }
    int any = 0;
    for (int64_t j = 0; j < 2 * b; j++)
        if (g[j]) {
            S2 += (i128)g[j] * floordiv128(-X * (j - b), D2);
            S20 += g[j];
            any = 1;
        }
    i128 S = S1 * S20 + S10 * S2;
    if (!any) {
        *result = S;
        return 0;
    }
    dioph dio = dioph_appr(-X, D2, 2 * (i128)b);
    int64_t q = (int64_t)dio.q;
    i128 a0 = dio.a0;
    int64_t ai = (int64_t)dio.a0_inv;
    i128 dn = add_chk(-mul_chk(X, q, &ovf), -mul_chk(a0, D2, &ovf), &ovf);
    int sd = sgn128(dn);

    /* tables */
    int64_t *G = work;
    int64_t *sigma = work + 2 * b;    /* q + 1 entries */
    int64_t *rho = sigma + q + 1;     /* q entries */
    for (int64_t j = 0; j < 2 * b; j++)
        G[j] = g[j] + (j >= q ? G[j - q] : 0);
    int64_t r = mod64((int64_t)((a0 % q) * ((b - q) % q) % q), q);
    int64_t a0q = mod64((int64_t)(a0 % q), q);
    for (int64_t n = b - q; n < b; n++) {
        rho[r] = G[n + b];
        r += a0q;
        if (r >= q)
            r -= q;
    }
    sigma[0] = sigma[1] = 0;
    for (int64_t t = 1; t < q; t++)
        sigma[t + 1] = sigma[t] + rho[q - t];
    int64_t Z = 0;
    if (sd < 0)
        for (int64_t n = q; n < b; n += q)
            Z += g[n + b];
    else if (sd > 0)
        for (int64_t n = q; n <= b; n += q)
            Z += g[b - n];
    i128 XQ = mul_chk(X, q, &ovf);
    i128 corr = 0;
    ival ALL = iv_all();

    for (int64_t i = 0; i < 2 * a && !ovf; i++) {
        if (!f[i])
            continue;
        int64_t m = i - a;
        i128 mabs = mc + m;
        i128 N = X * (MC - m);
        i128 F = floordiv128(N, D1);
        i128 fr = N - F * D1;
        i128 two_frq = mul_chk(mul_chk(2, fr, &ovf), q, &ovf);
        int64_t r0 = (int64_t)floordiv128(add_chk(two_frq, D1, &ovf), 2 * D1);
        i128 bn = add_chk(mul_chk(fr, q, &ovf), -mul_chk(r0, D1, &ovf), &ovf);
        int sb = sgn128(bn);
        i128 Qf = 0, Qc = 0;
        if (sd) {
            i128 qn = mul_chk(bn, NC, &ovf), qd = mul_chk(MC, dn, &ovf);
            if (ovf)
                break;
            Qf = floordiv128(qn, qd);
            Qc = ceildiv128(qn, qd);
        }
        int64_t T = sigma[r0];

        /* L1 - L0 on the class a0 n = -r0 */
        int64_t rc = mod64(-r0 * ai, q);
        if (0 < r0 && r0 < q) {
            if (sd > 0)
                T += sum_inter(G, rc, iv_ge(-Qf), b, q);
            else if (sd < 0)
                T += sum_inter(G, rc, iv_le(-Qc), b, q);
            else if (sb >= 0)
                T += sum_inter(G, rc, ALL, b, q);
        } else if (sd != 0 && sb != 0) {
            if (sb < 0) {
                if (sd < 0)
                    T += sum_inter(G, rc, iv_le(-Qc), b, q) + sum_inter(G, rc, iv_ge(1), b, q);
                else
                    T += sum_inter(G, rc, iv_le(-1), b, q) + sum_inter(G, rc, iv_ge(-Qf), b, q);
            } else if (sd > 0) {
                T += sum_inter(G, rc, iv_closed(-Qf, -1), b, q);
            } else {
                T += sum_inter(G, rc, iv_closed(1, -Qc), b, q);
            }
        }

        i128 Aq = mul_chk(-a0, mabs, &ovf);
        ival J = J_interval(sb, sd, Qf, Qc);
        if (q > 1) {
            /* L2 - L1 on the class a0 n = -1 - r0 */
            int64_t r1 = mod64((-1 - r0) * ai, q);
            i128 g1 = mul_chk(add_chk(mul_chk(-F, q, &ovf), -(r0 + 1) + a0 * NC, &ovf), mabs, &ovf);
            ival I = iv_shift(quad_ineq(Aq, g1, XQ, &ovf), -NC);
            T += sum_inter(G, r1, ALL, b, q) - sum_inter(G, r1, I, b, q);
            /* L2 - L1 on the class a0 n = -r0 */
            g1 = mul_chk(add_chk(mul_chk(-F, q, &ovf), -r0 + a0 * NC, &ovf), mabs, &ovf);
            I = iv_shift(quad_ineq(Aq, g1, XQ, &ovf), -NC);
            T += sum_inter(G, rc, J, b, q) - sum_inter(G, rc, iv_and(I, J), b, q);
        } else {
            ival Is[2];
            for (int j = 0; j < 2; j++) {
                if (a0 != 0) {
                    i128 g1 = mul_chk(add_chk(-F - (r0 + j), a0 * NC, &ovf), mabs, &ovf);
                    Is[j] = iv_shift(quad_ineq(Aq, g1, X, &ovf), -NC);
                } else {
                    i128 K = F + r0 + j;
                    Is[j] = K > 0 ? iv_ge(floordiv128(X, mul_chk(mabs, K, &ovf)) + 1 - NC) : iv_empty();
                }
            }
            int64_t fail = sum_inter(G, 0, iv_and(Is[0], J), b, 1)
                         + sum_inter(G, 0, iv_and(Is[1], iv_complement_ray(J)), b, 1);
            T += G[2 * b - 1] - fail;
        }
        if (0 < r0 && r0 < q)
            T += Z;
        corr += (i128)f[i] * T;
    }
    if (ovf)
        return 1;
    *result = S + corr;
    return 0;
}

/* Tiles of size 2a x 2b from (m0, n0), zero-padded past m1, n1. */
static int k_double_sum(int64_t m0, int64_t m1, int64_t n0, int64_t n1, int64_t a, int64_t b,
                        const int8_t *f, const int8_t *g, int64_t x, i128 *result)
{
    int8_t *ft = (int8_t *)malloc((size_t)(2 * a));
    int8_t *gt = (int8_t *)malloc((size_t)(2 * b));
    int64_t *work = (int64_t *)malloc((size_t)(6 * b + 2) * sizeof(int64_t));
    i128 S = 0;
    int err = 0;
    for (int64_t mm = m0; mm < m1 && !err; mm += 2 * a) {
        int any_f = 0;
        for (int64_t i = 0; i < 2 * a; i++) {
            ft[i] = (mm + i < m1) ? f[mm + i - m0] : 0;
            any_f |= ft[i];
        }
        if (!any_f)
            continue;
        for (int64_t nn = n0; nn < n1; nn += 2 * b) {
            int any_g = 0;
            for (int64_t j = 0; j < 2 * b; j++) {
                gt[j] = (nn + j < n1) ? g[nn + j - n0] : 0;
                any_g |= gt[j];
            }
            if (!any_g)
                continue;
            i128 part;
            if (k_sum_by_lin(ft, gt, x, mm + a, nn + b, a, b, work, &part)) {
                err = 1;
                break;
            }
            S += part;
        }
    }
    free(ft);
    free(gt);
    free(work);
    *result = S;
    return err;
}

#endif
