#include "polyext/fp.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace polyext {

namespace {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (!out.empty() && out.back() == letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

}  // namespace

Word canonicalize(const Word& w) {
  Word r = free_reduce(w);
  // Cyclic reduction: conjugating away matching first/last letters can expose
  // fresh cancellations only at the seam, handled by the loop itself.
  while (r.size() >= 2 && r.front() == r.back()) {
    r.erase(r.begin());
    r.pop_back();
    r = free_reduce(r);
  }
  if (r.empty()) return r;
  // Lexicographically minimal rotation.
  std::size_t n = r.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      int a = r[(cand + k) % n];
      int b = r[(best + k) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  Word out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = r[(best + k) % n];
  return out;
}

Word RelExpr::flatten() const {
  Word once;
  if (gen >= 0) {
    once.push_back(gen);
  } else {
    for (const auto& part : parts) {
      Word sub = part.flatten();
      once.insert(once.end(), sub.begin(), sub.end());
    }
  }
  Word out;
  out.reserve(once.size() * power);
  for (int k = 0; k < power; ++k) out.insert(out.end(), once.begin(), once.end());
  return out;
}

std::string RelExpr::render(const std::vector<std::string>& labels) const {
  std::string inner;
  if (gen >= 0) {
    inner = labels.at(gen);
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) inner += ' ';
      inner += parts[i].render(labels);
    }
  }
  if (power == 1) return inner;
  return "( " + inner + " )^" + std::to_string(power);
}

RelExpr RelExpr::atom(int g) {
  RelExpr e;
  e.gen = g;
  return e;
}

RelExpr RelExpr::seq(std::vector<RelExpr> items) {
  RelExpr e;
  e.parts = std::move(items);
  return e;
}

RelExpr RelExpr::word(const Word& w) {
  std::vector<RelExpr> items;
  items.reserve(w.size());
  for (int g : w) items.push_back(atom(g));
  return seq(std::move(items));
}

RelExpr RelExpr::pow(RelExpr base, int k) {
  if (k < 1) throw Error("relator power must be positive");
  if (base.power != 1) {
    // Nest instead of multiplying so the rendering mirrors the source.
    RelExpr wrap;
    wrap.parts.push_back(std::move(base));
    wrap.power = k;
    return wrap;
  }
  base.power = k;
  return base;
}

Presentation Presentation::over_involutions(std::vector<std::string> labels) {
  Presentation p;
  p.labels = std::move(labels);
  for (int i = 0; i < p.ngens(); ++i) p.relators.push_back(RelExpr::pow(RelExpr::atom(i), 2));
  return p;
}

void Presentation::add(RelExpr r) {
  Word cw = canonicalize(r.flatten());
  if (cw.empty()) return;
  for (int letter : cw)
    if (letter < 0 || letter >= ngens()) throw Error("presentation: relator letter out of range");
  for (const auto& existing : relators)
    if (canonicalize(existing.flatten()) == cw) return;
  relators.push_back(std::move(r));
}

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(r.flatten());
  return out;
}

std::vector<Word> Presentation::canonical_relators() const {
  std::vector<Word> out;
  for (const auto& r : relators) {
    Word cw = canonicalize(r.flatten());
    if (cw.size() == 1) continue;  // degenerate: a single letter would force g = 1
    if (!cw.empty()) out.push_back(std::move(cw));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens " << ngens() << '\n';
  for (const auto& r : relators) out << r.render(labels) << '\n';
  return out.str();
}

namespace {

struct LabelTable {
  int ngens;
  std::vector<std::string> labels;

  explicit LabelTable(int n) : ngens(n), labels(n) {}

  int lookup(const std::string& token) {
    std::size_t split = token.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(token[split - 1]))) --split;
    if (split == 0 || split == token.size())
      throw Error("presentation parse: bad generator label '" + token + "'");
    for (std::size_t i = 0; i < split; ++i)
      if (!std::isalpha(static_cast<unsigned char>(token[i])))
        throw Error("presentation parse: bad generator label '" + token + "'");
    int index = std::stoi(token.substr(split));
    if (index < 0 || index >= ngens)
      throw Error("presentation parse: generator index out of range in '" + token + "'");
    if (labels[index].empty())
      labels[index] = token;
    else if (labels[index] != token)
      throw Error("presentation parse: conflicting labels for generator " + std::to_string(index));
    return index;
  }
};

int parse_power(const std::string& tail, const std::string& token) {
  if (tail.empty() || tail[0] != '^')
    throw Error("presentation parse: bad power suffix in '" + token + "'");
  for (std::size_t i = 1; i < tail.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tail[i])))
      throw Error("presentation parse: bad power suffix in '" + token + "'");
  if (tail.size() == 1) throw Error("presentation parse: bad power suffix in '" + token + "'");
  int k = std::stoi(tail.substr(1));
  if (k < 1) throw Error("presentation parse: power must be >= 1 in '" + token + "'");
  return k;
}

RelExpr parse_relator_line(const std::string& line, LabelTable& table) {
  std::istringstream in(line);
  std::vector<RelExpr> stack_nodes;  // open groups
  stack_nodes.push_back(RelExpr::seq({}));
  std::string token;
  while (in >> token) {
    if (token == "(") {
      stack_nodes.push_back(RelExpr::seq({}));
    } else if (token[0] == ')') {
      if (stack_nodes.size() < 2) throw Error("presentation parse: unbalanced ')'");
      RelExpr group = std::move(stack_nodes.back());
      stack_nodes.pop_back();
      if (group.parts.empty()) throw Error("presentation parse: empty group");
      int k = token.size() == 1 ? 1 : parse_power(token.substr(1), token);
      stack_nodes.back().parts.push_back(RelExpr::pow(std::move(group), k));
    } else {
      std::size_t caret = token.find('^');
      std::string name = token.substr(0, caret);
      int k = caret == std::string::npos ? 1 : parse_power(token.substr(caret), token);
      int index = table.lookup(name);
      stack_nodes.back().parts.push_back(RelExpr::pow(RelExpr::atom(index), k));
    }
  }
  if (stack_nodes.size() != 1) throw Error("presentation parse: unbalanced '('");
  if (stack_nodes.front().parts.empty()) throw Error("presentation parse: empty relator line");
  if (stack_nodes.front().parts.size() == 1) return std::move(stack_nodes.front().parts.front());
  return std::move(stack_nodes.front());
}

}  // namespace

Presentation Presentation::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("presentation parse: empty input");
  {
    std::istringstream header(line);
    std::string keyword;
    int n = -1;
    if (!(header >> keyword >> n) || keyword != "gens" || n < 1)
      throw Error("presentation parse: expected 'gens <n>' header");
    std::string extra;
    if (header >> extra) throw Error("presentation parse: trailing tokens after header");
    Presentation p;
    LabelTable table(n);
    std::vector<RelExpr> parsed;
    while (std::getline(in, line)) {
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      parsed.push_back(parse_relator_line(line, table));
    }
    for (int i = 0; i < n; ++i)
      if (table.labels[i].empty()) table.labels[i] = "r" + std::to_string(i);
    p.labels = table.labels;
    p.relators = std::move(parsed);
    return p;
  }
}

std::vector<Permutation> CosetTable::coset_permutations() const {
  if (status != Status::complete) throw Error("coset table: action requested on aborted table");
  std::vector<Permutation> out;
  out.reserve(action.size());
  for (const auto& col : action) out.push_back(Permutation(std::vector<int>(col)));
  return out;
}

namespace {

class Enumerator {
public:
  Enumerator(int ngens, std::size_t limit) : ngens_(ngens), limit_(limit), table_(ngens) {
    new_coset();
  }

  int find(int c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  bool aborted() const { return aborted_; }
  std::size_t allocated() const { return rep_.size(); }
  std::size_t live() const { return live_; }

  static constexpr int kChanged = 1;  // the table gained entries or merged
  static constexpr int kRefused = 2;  // a needed definition hit the limit

  // Scan the relator word at coset c, filling undefined entries until the
  // cycle closes.  Returns a bitmask of kChanged / kRefused; a scan that
  // closes without kRefused stays closed forever, since coincidences only
  // rename targets along the walk and never clear them.
  int scan_fill(int c, const Word& w) {
    if (w.empty()) return 0;
    int result = 0;
    int f = c;
    long i = 0;
    int b = c;
    long j = static_cast<long>(w.size()) - 1;
    while (true) {
      while (i <= j) {
        int t = table_[w[i]][f];
        if (t < 0) break;
        f = t;
        ++i;
      }
      while (j >= i) {
        int t = table_[w[j]][b];
        if (t < 0) break;
        b = t;
        --j;
      }
      if (i > j) {
        if (f != b) {
          coincide(f, b);
          result |= kChanged;
        }
        return result;
      }
      if (i == j) {
        table_[w[i]][f] = b;
        table_[w[i]][b] = f;
        return result | kChanged;
      }
      if (aborted_) return result | kRefused;
      int d = new_coset();
      if (d < 0) return result | kRefused;
      table_[w[i]][f] = d;
      table_[w[i]][d] = f;
      f = d;
      ++i;
      result |= kChanged;
    }
  }

  bool is_live(int c) { return rep_[c] == c; }

  // A coset is done once every relator scan at it closed with fills: its row
  // is then full (each generator occurs as an involution relator) and closed
  // cycles survive coincidences, so rescanning it can never change the table.
  bool done(int c) const { return done_[c] != 0; }
  void mark_done(int c) { done_[c] = 1; }

  // Renumber live cosets downwards, dropping dead rows so their slots count
  // against the limit again.  Only worthwhile once the table hit the limit;
  // returns false when too few rows would be freed to make progress.
  bool compact(std::size_t headroom) {
    if (live_ + headroom > limit_) return false;
    std::vector<int> renumber(rep_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < rep_.size(); ++c)
      if (rep_[c] == static_cast<int>(c)) renumber[c] = next++;
    for (auto& col : table_) {
      for (std::size_t c = 0; c < rep_.size(); ++c) {
        if (renumber[c] < 0) continue;
        int t = col[c];
        col[renumber[c]] = t < 0 ? -1 : renumber[find(t)];
      }
      col.resize(next);
    }
    for (std::size_t c = 0; c < rep_.size(); ++c)
      if (renumber[c] >= 0) done_[renumber[c]] = done_[c];
    done_.resize(next);
    rep_.resize(next);
    std::iota(rep_.begin(), rep_.end(), 0);
    live_ = next;
    aborted_ = false;
    return true;
  }

  CosetTable finish(std::size_t limit) {
    CosetTable out;
    out.limit = limit;
    out.ngens = ngens_;
    out.cosets_allocated = allocated();
    if (aborted_) {
      out.status = CosetTable::Status::aborted;
      return out;
    }
    out.status = CosetTable::Status::complete;
    std::vector<int> renumber(rep_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < rep_.size(); ++c)
      if (rep_[c] == static_cast<int>(c)) renumber[c] = next++;
    out.index = static_cast<std::size_t>(next);
    out.action.assign(ngens_, std::vector<int>(next, -1));
    for (std::size_t c = 0; c < rep_.size(); ++c) {
      if (rep_[c] != static_cast<int>(c)) continue;
      for (int g = 0; g < ngens_; ++g) {
        int t = table_[g][c];
        if (t < 0) throw Error("coset table: incomplete entry after stable pass");
        out.action[g][renumber[c]] = renumber[find(t)];
      }
    }
    return out;
  }

private:
  int new_coset() {
    if (rep_.size() >= limit_) {
      aborted_ = true;
      return -1;
    }
    int id = static_cast<int>(rep_.size());
    rep_.push_back(id);
    done_.push_back(0);
    for (auto& col : table_) col.push_back(-1);
    ++live_;
    return id;
  }

  void coincide(int a, int b) {
    pending_.clear();
    pending_.emplace_back(a, b);
    while (!pending_.empty()) {
      auto [x0, y0] = pending_.back();
      pending_.pop_back();
      int x = find(x0);
      int y = find(y0);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      rep_[y] = x;
      --live_;
      for (int g = 0; g < ngens_; ++g) {
        int z = table_[g][y];
        if (z < 0) continue;
        table_[g][y] = -1;
        // The reverse edge lives on z's row (or on y itself for a self-link);
        // entries always reference live cosets, so z is live here.
        if (z != y && table_[g][z] == y) table_[g][z] = -1;
        int zr = z == y ? x : find(z);
        int w = table_[g][x];
        if (w < 0) {
          int v = table_[g][zr];
          if (v < 0) {
            table_[g][x] = zr;
            table_[g][zr] = x;
          } else {
            pending_.emplace_back(x, v);
          }
        } else {
          pending_.emplace_back(w, zr);
        }
      }
    }
  }

  int ngens_;
  std::size_t limit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;
  std::vector<char> done_;
  std::size_t live_ = 0;
  bool aborted_ = false;
  std::vector<std::pair<int, int>> pending_;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        std::size_t limit) {
  if (limit < 1) throw Error("todd_coxeter: limit must be >= 1");
  for (const auto& w : subgroup_gens)
    for (int letter : w)
      if (letter < 0 || letter >= p.ngens()) throw Error("todd_coxeter: subgroup word letter out of range");
  std::vector<Word> relators = p.relator_words();
  for (const auto& w : relators)
    for (int letter : w)
      if (letter < 0 || letter >= p.ngens()) throw Error("todd_coxeter: relator letter out of range");

  Enumerator enumerator(p.ngens(), limit);
  const bool trace = std::getenv("POLYEXT_TC_TRACE") != nullptr;
  // Once the table is full a pass keeps scanning without defining cosets;
  // coincidences found that way shrink the live set, and compacting the dead
  // rows frees their slots so definitions can resume.  Require a fraction of
  // the limit back before resuming, so full-table passes cannot ping-pong.
  const std::size_t headroom = std::max<std::size_t>(limit / 16, 1024);
  std::size_t pass = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& w : subgroup_gens)
      if (enumerator.scan_fill(0, w) & Enumerator::kChanged) changed = true;
    std::size_t done_count = 0;
    for (std::size_t c = 0; c < enumerator.allocated(); ++c) {
      int cc = static_cast<int>(c);
      if (!enumerator.is_live(cc)) continue;
      if (enumerator.done(cc)) {
        ++done_count;
        continue;
      }
      int scans = 0;
      for (const auto& w : relators) {
        scans |= enumerator.scan_fill(cc, w);
        if (!enumerator.is_live(cc)) break;
      }
      if (scans & Enumerator::kChanged) changed = true;
      if (!(scans & Enumerator::kRefused) && enumerator.is_live(cc)) {
        enumerator.mark_done(cc);
        ++done_count;
      }
    }
    ++pass;
    if (trace)
      std::fprintf(stderr, "todd_coxeter: pass %zu allocated %zu live %zu done %zu%s\n",
                   pass, enumerator.allocated(), enumerator.live(), done_count,
                   enumerator.aborted() ? " (table full)" : "");
    if (enumerator.aborted()) {
      if (!enumerator.compact(headroom)) break;
      changed = true;
    }
  }
  return enumerator.finish(limit);
}

Permutation evaluate(const Word& w, const std::vector<Permutation>& images, int degree) {
  Permutation out(degree);
  for (int letter : w) {
    if (letter < 0 || letter >= static_cast<int>(images.size()))
      throw Error("evaluate: generator index out of range");
    out = compose(out, images[letter]);
  }
  return out;
}

EpimorphismReport verify_epimorphism(const Presentation& p,
                                     const std::vector<Permutation>& images,
                                     const PermGroup& target) {
  if (static_cast<int>(images.size()) != p.ngens())
    throw Error("verify_epimorphism: image count does not match generator count");
  for (const auto& img : images)
    if (!target.contains(img)) throw Error("verify_epimorphism: image outside target group");
  EpimorphismReport report;
  report.relators_hold = true;
  const int degree = target.degree();
  for (const auto& r : p.relators) {
    if (!evaluate(r.flatten(), images, degree).is_identity()) {
      report.relators_hold = false;
      report.first_failed_relator = r.render(p.labels);
      break;
    }
  }
  report.generates_target = generated_order(images) == target.order();
  return report;
}

}  // namespace polyext
