#include <sstream>

#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"

namespace wzlab {

namespace {

struct Display {
  const char* display;
  std::vector<std::string> ids;
  const char* reason = "";
  // Printed form is false even though every mapped check holds as stated.
  bool corrected = false;
};

// Displayed statements of the derivation, in order. Rows with a reason and no
// ids are out of scope; theorem names refer to the theorem verifier.
const std::vector<Display>& displays() {
  static const std::vector<Display> rows = {
      {"generalized harmonic numbers and H(1,1;n)", {}, "notation"},
      {"Wolstenholme, first order", {"wolstenholme.h1"}},
      {"Wolstenholme, second order", {"wolstenholme.h2"}},
      {"sum of H_{2k}/k", {"lemma2.1.a"}},
      {"half harmonic number", {"lemma2.1.b"}},
      {"half harmonic number of order 2", {"lemma2.1.c"}},
      {"sum of kH_{2k}", {"lemma2.2.a"}},
      {"sum of H_{2k}", {"lemma2.2.b"}},
      {"sum of (2k+1)H_{2k}^2", {"lemma2.2.c"}},
      {"alternating sum of kH_k", {"lemma2.alt-khk.swap", "lemma2.alt-khk.closed"}},
      {"closed form for the sum of kH_k", {"lemma2.kh2k.closed"}},
      {"alternating harmonic number", {"lemma2.alt-harmonic.split", "lemma2.alt-harmonic"}},
      {"sum of kH_{2k} by parity", {"lemma2.kh2k.parity", "lemma2.2.a"}},
      {"alternating double sum", {"lemma2.alt-double"}},
      {"alternating harmonic number of order 2", {"lemma2.alt-square.split", "lemma2.alt-square"}},
      {"alternating weighted sum of H_k^2",
       {"lemma2.alt-weighted-square.expand", "lemma2.alt-weighted-square.swap",
        "lemma2.alt-weighted-square.closed", "lemma2.alt-weighted-square"}},
      {"alternating weighted sum of H_k(2)", {"lemma2.alt-weighted-h2.closed", "lemma2.alt-weighted-h2"}},
      {"weighted sum of H_k^2", {"lemma2.weighted-square"}},
      {"weighted sum of H_k(2)", {"lemma2.weighted-h2"}},
      {"sum of (2k+1)H_{2k}^2 by parity", {"lemma2.2.c.parity", "lemma2.2.c"}},

      {"Dixon 3F2 summation", {}, "classical hypergeometric identity, not a finite check"},
      {"WZ pair F, G for the quartic series", {"sec3.telescope", "sec4.telescope"}},
      {"certificate alpha(n,k)", {"sec3.telescope", "sec4.telescope"}},
      {"WZ equation, quartic pair", {"sec3.telescope", "sec4.telescope"}},
      {"WZ equation summed over k", {"sec3.telescope"}},
      {"telescoped sum up to n=(p-3)/2", {"sec3.telescope"}},
      {"G(n,0) closed form", {"sec3.g-closed"}},
      {"F((p-1)/2,k) closed form", {"sec3.f-closed"}},
      {"half-range reduction", {"sec3.reduction"}},
      {"inner sum M", {"sec3.inner"}},
      {"C(p-1+2k,(p-1)/2+k) expansion", {"sec3.central-up.product", "sec3.central-up.ratio", "sec3.central-up"}},
      {"C(p-1-2k,(p-1)/2-k) expansion",
       {"sec3.central-down.product", "sec3.central-down.ratio", "sec3.central-down"}},
      {"C(p-1,k) expansion", {"sec3.binomial-p1"}},
      {"C(2p-2,p-1-k) expansion", {"sec3.binomial-2p2.harmonic", "sec3.binomial-2p2"}},
      {"rational weight of the inner sum", {"sec3.rational-weight"}},
      {"odd reciprocal sum", {"sec3.odd-reciprocal.reflect", "sec3.odd-reciprocal"}},
      {"M normalized by C(p-1,(p-1)/2)^2", {"sec3.inner-normalized"}},
      {"Morley", {"sec3.morley"}},
      {"M modulo p^4", {"sec3.inner"}},
      {"C((3p-3)/2,(p-1)/2) expansion",
       {"sec3.binomial-3half.product", "sec3.binomial-3half.harmonic", "sec3.binomial-3half"}},
      {"C(2p-1,p-1) modulo p^3", {"sec3.binomial-2p1"}},
      {"powers of 2^{p-1}", {"sec3.fermat-power"}},
      {"quartic sum up to (p-3)/2", {"sec3.half-sum-short"}},
      {"last term of the half-range sum", {"sec3.last-term.closed", "sec3.last-term"}},
      {"half-range quartic sum", {"sec3.half-split", "T1.1"}},

      {"WZ equation summed over n", {"sec4.telescope"}, "index of G read as the telescoped sum", true},
      {"telescoped sum up to n=p-1", {"sec4.telescope"}},
      {"F(p,k) closed form", {"sec4.f-closed"}},
      {"full-range reduction", {"sec4.reduction"}},
      {"five-piece split", {"sec4.split.piece-sum"}},
      {"G*(k) definition", {"sec4.split.piece-sum"}},
      {"C(4p,2p+k) expansion", {"sec4.binomial-4p"}},
      {"C(2p-2k,p-k) expansion", {"sec4.central-2p-minus"}},
      {"C(2p+2k,p+k) expansion", {"sec4.central-2p-plus"}},
      {"C(p+k,2k+1) expansion", {"sec4.binomial-pk"}},
      {"low piece termwise", {"sec4.piece-term"}},
      {"low piece weight", {"sec4.weight"}},
      {"low piece sum", {"sec4.harmonic-reflect", "sec4.low-piece"}},
      {"high piece reindexed", {"sec4.high-piece.reindex"}},
      {"C(4p,p+1+k) expansion", {"sec4.binomial-4p-shift"}},
      {"C(4p-2k,2p-k)C(2k,k) expansion", {"sec4.ratio.exact", "sec4.ratio"}},
      {"high piece termwise", {"sec4.high-term"}},
      {"C(4p,2p) modulo p^3", {"sec4.central-4p"}},
      {"high piece weight", {"sec4.high-weight"}},
      {"high piece sum", {"sec4.high-piece"}},
      {"odd reciprocal sum to (p-3)/2", {"sec4.odd-sum.reflect", "sec4.odd-sum"}},
      {"odd reciprocal squares", {"sec4.odd-square-sum.reflect", "sec4.odd-square-sum"}},
      {"reflected half harmonic number", {"sec4.harmonic-half-reflect"}},
      {"sum of H_k/k", {"sec4.harmonic-over-k"}},
      {"sum of H_k/(2k+1)", {"sec4.harmonic-odd.reflect", "sec4.harmonic-odd"}},
      {"sum of H_{2k-1}/(2k+1)", {"sec4.harmonic-odd-shift.reflect", "sec4.harmonic-odd-shift"}},
      {"C(4p,(5p-1)/2) expansion", {"sec4.binomial-4p-mid"}},
      {"C(3p-1,(3p-1)/2) expansion", {"sec4.central-3p"}},
      {"C(4p,p) chain", {"sec4.binomial-4p-p", "sec4.central-2p", "sec4.binomial-2p1"}},
      {"G*(0)", {"sec4.piece-zero"}},
      {"G*(p-1)", {"sec4.piece-last"}},
      {"G*((p-1)/2)", {"sec4.piece-middle"}},
      {"sum of G*(k)", {"sec4.inner"}},
      {"C(3p,p)C(2p,p) modulo p^3", {"sec4.binomial-product"}},
      {"full-range quartic sum", {"T1.2"}},

      {"7F6 summation", {}, "classical hypergeometric identity, not a finite check"},
      {"WZ pair F', G' for the cubic series", {"sec5.telescope", "sec6.telescope"}},
      {"certificate beta(n,k)", {"sec5.telescope", "sec6.telescope"}, "certificate repaired", true},
      {"WZ equation, cubic pair", {"sec5.telescope", "sec6.telescope"}},
      {"cubic WZ equation summed over k", {"sec5.telescope"}},
      {"cubic telescoped sum up to n=p-1", {"sec5.telescope"}},
      {"cubic full-range reduction", {"sec5.reduction"}},
      {"g_n definition", {"sec5.g-difference"}},
      {"g_n - 48G'(n,0) as a difference", {"sec5.g-difference"}},
      {"head and tail of the cubic sum", {"sec5.head-tail"}},
      {"reindexed cubic summand", {"sec5.reindex"}},
      {"four-piece split", {"sec5.split"}},
      {"F*(p,k) definition", {"sec5.split"}},
      {"C(4p-k-1,p) modulo p", {"sec5.binomial-4p-k"}},
      {"C(4p,2p)/C(2p,p) modulo p", {"sec5.central-ratio"}},
      {"C(2n-2k,n-k) identity", {"sec5.central-shift"}},
      {"C(4p-2k,2p-k)/C(2p-2k,p-k) modulo p",
       {"sec5.central-shift-ratio.exact", "sec5.central-shift-ratio"}},
      {"low F* piece", {"sec5.low-piece.weight", "sec5.low-piece.partial", "sec5.low-piece"}},
      {"C(2p,2k+2)/C(4p,2(p-1-k)) modulo p", {"sec5.ratio-sixth"}},
      {"C(2p,p-1-k)^2/C(p,k+1)^2 modulo p", {"sec5.ratio-four"}},
      {"C(3p+k,p)C(p-1,k) modulo p", {"sec5.ratio-three"}},
      {"high F* piece", {"sec5.high-piece.reindex", "sec5.high-piece.partial", "sec5.high-piece"}},
      {"sum of 1/(4^k k)", {"sec5.quarter-sum.reflect", "sec5.quarter-sum"}},
      {"sum of 1/(4^k(2k-1))", {"sec5.quarter-odd-sum.reflect", "sec5.quarter-odd-sum"}},
      {"Granville", {"sec5.granville"}},
      {"power sums of 4^k", {"sec5.power-sums.identity", "sec5.power-sums"}},
      {"low and high F* pieces", {"sec5.split-pieces"}},
      {"C(2p-1,(p-1)/2) modulo p^2", {"sec5.binomial-2p1-half.harmonic", "sec5.binomial-2p1-half"}},
      {"C((7p-1)/2,p) modulo p^2", {"sec5.binomial-7half.harmonic", "sec5.binomial-7half"}},
      {"C(4p,2p)/C(4p,p) and C(3p,2p)/C(2p,p)", {"sec5.binomial-ratio-4p", "sec5.binomial-ratio-3p"}},
      {"F*(p,p-1)", {"sec5.piece-last.closed", "sec5.piece-last"}},
      {"F*(p,(p-1)/2)", {"sec5.piece-middle.closed", "sec5.piece-middle"}},
      {"reindexed cubic sum from k=1", {"sec5.inner-tail"}},
      {"reindexed cubic sum from k=0", {"sec5.inner.closed", "sec5.inner"}},
      {"cubic tail from k=2", {"sec5.tail"}},
      {"full-range cubic sum", {"sec5.head", "T1.3"}},

      {"cubic telescoped sum up to n=(p-1)/2", {"sec6.telescope"}},
      {"cubic half-range reduction", {"sec6.reduction"}},
      {"head and tail of the half-range cubic sum", {"sec6.head-tail"}},
      {"C(2p-k,(p-1)/2) modulo p", {"sec6.binomial-2pk-half"}, "product line not checked", true},
      {"Sun", {"sec6.sun"}},
      {"sum of the reindexed half-range summand", {"sec6.s-sum.closed", "sec6.s-sum"}},
      {"C(2p-1,p-1)C(2p-1,(p-1)/2)/C(p-1,(p-1)/2) term", {"sec6.boundary-a"}},
      {"C((3p-3)/2,(p-1)/2)C(p-1,(p-1)/2) term", {"sec6.boundary-b"}},
      {"C((3p-3)/2,(p-1)/2)C(p-1,(p-1)/2)^2 term", {"sec6.boundary-c"}},
      {"half-range summand reindexed", {"sec6.reindex", "sec6.l-sum"}},
      {"weighted half-range tail", {"sec6.weighted-tail"}},
      {"half-range cubic tail from k=2", {"sec6.tail"}},
      {"half-range cubic sum", {"T1.4"}},
  };
  return rows;
}

const CheckDescriptor* lookup(const std::string& id) {
  for (const auto& d : manifest()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

}  // namespace

std::vector<CoverageRow> coverage_table() {
  std::vector<CoverageRow> out;
  for (const auto& d : displays()) {
    CoverageRow row;
    row.display = d.display;
    row.check_ids = d.ids;
    row.reason = d.reason;
    bool corrected = d.corrected;
    bool mapped = !d.ids.empty();
    for (const auto& id : d.ids) {
      if (const CheckDescriptor* c = lookup(id)) {
        if (row.anchor.empty()) row.anchor = c->anchor;
        if (!c->printed_form_holds) corrected = true;
      } else if (parse_theorem_id(id)) {
        if (row.anchor.empty()) row.anchor = theorem_spec(*parse_theorem_id(id)).anchor;
      } else {
        mapped = false;
      }
    }
    if (mapped) {
      row.status = corrected ? "corrected" : "checked";
    } else {
      row.status = (d.ids.empty() && *d.reason) ? "out-of-scope" : "UNMAPPED";
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string coverage_text() {
  std::ostringstream os;
  os << "status\tdisplay\tchecks\tnote\n";
  for (const auto& r : coverage_table()) {
    os << r.status << '\t' << r.display << '\t';
    for (std::size_t i = 0; i < r.check_ids.size(); ++i) os << (i ? "," : "") << r.check_ids[i];
    if (r.check_ids.empty()) os << '-';
    os << '\t' << (r.reason.empty() ? "-" : r.reason) << '\n';
  }
  return os.str();
}

}  // namespace wzlab
