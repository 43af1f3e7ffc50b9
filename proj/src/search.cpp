#include "eisenfold/search.hpp"
#include "eisenfold/surd.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"

namespace eisenfold {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Smallest fold count allowed by eta >= 3: ceil(sqrt(3 F)).
std::int64_t isoperimetric_floor(std::int64_t faces) {
  auto r = static_cast<std::int64_t>(std::sqrt(3.0 * static_cast<double>(faces)));
  while (r * r < 3 * faces) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= 3 * faces) --r;
  return r;
}

// Depth-first state over faces in search order, with the vertex mod-3
// constraint and the balance constraint propagated incrementally.
class Engine {
 public:
  explicit Engine(const QuotientComplex& c) : F_(c.face_count()) {
    order_ = search_face_order(c);
    std::vector<int> pos(F_);
    for (int i = 0; i < F_; ++i) pos[order_[i]] = i;
    corners_.resize(F_);
    back_.resize(F_);
    for (int i = 0; i < F_; ++i) {
      const int f = order_[i];
      corners_[i] = c.face_vertices()[f];
      for (int s = 0; s < 3; ++s) {
        const SideRef o = c.glued({f, s});
        if (pos[o.face] < i) back_[i].push_back(pos[o.face]);
      }
    }
    deg_.resize(c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v) deg_[v] = c.vertices()[v].degree;
    black_.assign(c.vertex_count(), 0);
    assigned_.assign(c.vertex_count(), 0);
    colors_.assign(F_, Color::Black);
  }

  int size() const { return F_; }
  const std::vector<int>& order() const { return order_; }
  std::int64_t folds() const { return folds_; }

  // Applies color at position i; returns the fold increment. feasible() tells
  // whether the constraints can still be met.
  std::int64_t apply(int i, Color col) {
    colors_[i] = col;
    std::int64_t df = 0;
    for (int p : back_[i]) df += colors_[p] != col;
    folds_ += df;
    const int b = col == Color::Black;
    for (int v : corners_[i]) {
      ++assigned_[v];
      black_[v] += b;
    }
    (b ? black_total_ : white_total_) += 1;
    return df;
  }

  void undo(int i, std::int64_t df) {
    const int b = colors_[i] == Color::Black;
    for (int v : corners_[i]) {
      --assigned_[v];
      black_[v] -= b;
    }
    (b ? black_total_ : white_total_) -= 1;
    folds_ -= df;
  }

  bool feasible(int i) const {
    // Good colorings of these complexes are balanced.
    if (2 * black_total_ > F_ || 2 * white_total_ > F_) return false;
    for (int v : corners_[i]) {
      const int lo = black_[v], hi = black_[v] + deg_[v] - assigned_[v];
      const int t = (2 * deg_[v]) % 3;  // need 2B = deg (mod 3), i.e. B = 2 deg (mod 3)
      const int first = lo + ((t - lo % 3) + 3) % 3;
      if (first > hi) return false;
    }
    return true;
  }

  // Colors in face order.
  std::vector<Color> face_colors() const {
    std::vector<Color> out(F_);
    for (int i = 0; i < F_; ++i) out[order_[i]] = colors_[i];
    return out;
  }

  const std::vector<Color>& position_colors() const { return colors_; }

 private:
  int F_;
  std::vector<int> order_;
  std::vector<std::array<int, 3>> corners_;
  std::vector<std::vector<int>> back_;
  std::vector<int> deg_, black_, assigned_;
  std::vector<Color> colors_;
  int black_total_ = 0, white_total_ = 0;
  std::int64_t folds_ = 0;
};

// Plain enumeration with the first face fixed Black.
template <class Leaf>
bool enumerate_from(Engine& e, int i, Leaf& leaf) {
  if (i == e.size()) return leaf();
  for (Color col : {Color::Black, Color::White}) {
    if (i == 0 && col == Color::White) break;
    const std::int64_t df = e.apply(i, col);
    bool go = true;
    if (e.feasible(i)) go = enumerate_from(e, i + 1, leaf);
    e.undo(i, df);
    if (!go) return false;
  }
  return true;
}

struct Budget {
  Clock::time_point start = Clock::now();
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};

  bool exhausted() {
    const std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (stop.load(std::memory_order_relaxed)) return true;
    if (node_limit && n > node_limit) stop = true;
    if (time_limit > 0 && (n & 1023) == 0 && seconds_since(start) > time_limit) stop = true;
    return stop.load(std::memory_order_relaxed);
  }
};

struct SubtreeResult {
  bool complete = false;
  std::optional<std::int64_t> value;
  std::vector<Color> positions;  // colors in search order
  std::optional<std::int64_t> open_lb;
};

// Branch and bound below a fixed prefix. Prunes when folds >= bound(), where
// bound() = min(shared best + 1, first value found here).
class Brancher {
 public:
  Brancher(Engine& e, Budget& budget, std::atomic<std::int64_t>& shared_best)
      : e_(e), budget_(budget), shared_(shared_best) {}

  SubtreeResult run(const std::vector<Color>& prefix) {
    SubtreeResult r;
    std::vector<std::int64_t> dfs;
    bool ok = true;
    for (std::size_t i = 0; i < prefix.size() && ok; ++i) {
      dfs.push_back(e_.apply(static_cast<int>(i), prefix[i]));
      ok = e_.feasible(static_cast<int>(i));
    }
    if (ok) r.complete = explore(static_cast<int>(prefix.size()));
    else r.complete = true;
    for (std::size_t i = dfs.size(); i-- > 0;) e_.undo(static_cast<int>(i), dfs[i]);
    r.value = found_;
    r.positions = best_;
    r.open_lb = open_lb_;
    return r;
  }

 private:
  std::int64_t bound() const {
    std::int64_t b = shared_.load(std::memory_order_relaxed) + 1;
    if (found_) b = std::min(b, *found_);
    return b;
  }

  void note_open(std::int64_t lb) {
    if (!open_lb_ || lb < *open_lb_) open_lb_ = lb;
  }

  bool explore(int i) {
    if (i == e_.size()) {
      found_ = e_.folds();
      best_ = e_.position_colors();
      std::int64_t cur = shared_.load();
      while (*found_ < cur && !shared_.compare_exchange_weak(cur, *found_)) {
      }
      return true;
    }
    if (budget_.exhausted()) {
      note_open(e_.folds());
      return false;
    }
    const Color first = Color::Black;
    for (Color col : {first, opposite(first)}) {
      if (i == 0 && col == Color::White) break;
      const std::int64_t df = e_.apply(i, col);
      bool done = true;
      if (e_.feasible(i) && e_.folds() < bound()) {
        if (budget_.stop) {
          note_open(e_.folds());
          done = false;
        } else {
          done = explore(i + 1);
        }
      }
      e_.undo(i, df);
      if (!done) {
        // Record the untried sibling as open too.
        if (col == first && i != 0) {
          const std::int64_t d2 = e_.apply(i, opposite(first));
          if (e_.feasible(i) && e_.folds() < bound()) note_open(e_.folds());
          e_.undo(i, d2);
        }
        return false;
      }
    }
    return true;
  }

  Engine& e_;
  Budget& budget_;
  std::atomic<std::int64_t>& shared_;
  std::optional<std::int64_t> found_;
  std::vector<Color> best_;
  std::optional<std::int64_t> open_lb_;
};

// Feasible prefixes of a given length, in lexicographic order (Black first).
std::vector<std::vector<Color>> split_prefixes(Engine& e, int depth) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == depth) {
      out.push_back(cur);
      return;
    }
    for (Color col : {Color::Black, Color::White}) {
      if (i == 0 && col == Color::White) break;
      const std::int64_t df = e.apply(i, col);
      if (e.feasible(i)) {
        cur.push_back(col);
        rec(i + 1);
        cur.pop_back();
      }
      e.undo(i, df);
    }
  };
  rec(0);
  return out;
}

std::int64_t prefix_folds(Engine& e, const std::vector<Color>& prefix) {
  std::vector<std::int64_t> dfs;
  for (std::size_t i = 0; i < prefix.size(); ++i) dfs.push_back(e.apply(static_cast<int>(i), prefix[i]));
  const std::int64_t f = e.folds();
  for (std::size_t i = dfs.size(); i-- > 0;) e.undo(static_cast<int>(i), dfs[i]);
  return f;
}

std::string to_bits(const std::vector<Color>& c) {
  std::string s(c.size(), '0');
  for (std::size_t i = 0; i < c.size(); ++i) s[i] = c[i] == Color::Black ? '0' : '1';
  return s;
}

std::vector<Color> from_bits(const std::string& s) {
  std::vector<Color> c;
  for (char ch : s) c.push_back(ch == '0' ? Color::Black : Color::White);
  return c;
}

constexpr const char* kCheckpointFormat = "eisenfold-search-checkpoint/1";

struct Checkpoint {
  std::map<std::size_t, SubtreeResult> done;
  std::uint64_t nodes = 0;
};

void write_checkpoint(const std::string& path, const QuotientComplex& c, int split_depth, std::size_t subtrees,
                      const Checkpoint& cp) {
  nlohmann::ordered_json j;
  j["format"] = kCheckpointFormat;
  j["beta"] = {c.beta().a, c.beta().b};
  j["faces"] = c.face_count();
  j["split_depth"] = split_depth;
  j["subtrees"] = subtrees;
  j["nodes"] = cp.nodes;
  auto& done = j["completed"] = nlohmann::ordered_json::array();
  for (const auto& [idx, r] : cp.done) {
    nlohmann::ordered_json e;
    e["index"] = idx;
    if (r.value) {
      e["fold"] = *r.value;
      e["colors"] = to_bits(r.positions);
    }
    done.push_back(e);
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot write checkpoint " + tmp);
    out << j.dump(1) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw DomainError("cannot move checkpoint into place: " + path);
}

Checkpoint read_checkpoint(const std::string& path, const QuotientComplex& c, int split_depth, std::size_t subtrees) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw DomainError("checkpoint " + path + " is not valid JSON: " + ex.what());
  }
  if (j.value("format", "") != kCheckpointFormat) throw DomainError("checkpoint " + path + " has an unknown format");
  if (j["beta"][0].get<std::int64_t>() != c.beta().a || j["beta"][1].get<std::int64_t>() != c.beta().b ||
      j["faces"].get<int>() != c.face_count() || j["split_depth"].get<int>() != split_depth ||
      j["subtrees"].get<std::size_t>() != subtrees)
    throw DomainError("checkpoint " + path + " belongs to a different search");
  cp.nodes = j.value("nodes", std::uint64_t{0});
  for (const auto& e : j["completed"]) {
    SubtreeResult r;
    r.complete = true;
    if (e.contains("fold")) {
      r.value = e["fold"].get<std::int64_t>();
      r.positions = from_bits(e["colors"].get<std::string>());
    }
    cp.done[e["index"].get<std::size_t>()] = r;
  }
  return cp;
}

// Exact branch and bound; also used for the anytime prefix.
struct BnbOutcome {
  bool complete = false;
  std::optional<std::int64_t> value;
  std::vector<Color> face_colors;
  std::int64_t open_lb = 0;
  std::uint64_t nodes = 0;
  unsigned threads = 1;
};

BnbOutcome branch_and_bound(const QuotientComplex& c, std::int64_t incumbent, const SearchOptions& opt, double time_limit,
                            std::uint64_t node_limit) {
  Engine proto(c);
  const int F = proto.size();
  const int split_depth = std::min(F, 12);
  const auto prefixes = split_prefixes(proto, split_depth);
  const unsigned threads = std::max(1u, std::min<unsigned>(effective_threads(opt.threads),
                                                          static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size()))));

  Checkpoint cp;
  if (!opt.checkpoint_path.empty() && opt.resume) cp = read_checkpoint(opt.checkpoint_path, c, split_depth, prefixes.size());

  Budget budget;
  budget.time_limit = time_limit;
  budget.node_limit = node_limit;
  budget.nodes = cp.nodes;
  if (node_limit) budget.node_limit = node_limit + cp.nodes;

  std::atomic<std::int64_t> shared_best{incumbent};
  for (const auto& [idx, r] : cp.done)
    if (r.value && *r.value < shared_best) shared_best = *r.value;

  std::vector<SubtreeResult> results(prefixes.size());
  std::vector<char> have(prefixes.size(), 0);
  for (const auto& [idx, r] : cp.done) {
    results[idx] = r;
    have[idx] = 1;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    Engine e(c);
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= prefixes.size()) return;
      if (have[idx]) continue;
      if (budget.stop) return;
      Brancher b(e, budget, shared_best);
      SubtreeResult r = b.run(prefixes[idx]);
      std::lock_guard<std::mutex> lock(mu);
      results[idx] = r;
      have[idx] = 1;
      if (r.complete) {
        cp.done[idx] = r;
        cp.nodes = budget.nodes;
        if (!opt.checkpoint_path.empty()) write_checkpoint(opt.checkpoint_path, c, split_depth, prefixes.size(), cp);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BnbOutcome out;
  out.threads = threads;
  out.nodes = budget.nodes;
  out.complete = true;
  std::optional<std::int64_t> open;
  auto note = [&](std::int64_t lb) {
    if (!open || lb < *open) open = lb;
  };
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (!have[i]) {
      out.complete = false;
      note(prefix_folds(proto, prefixes[i]));
      continue;
    }
    const SubtreeResult& r = results[i];
    if (!r.complete) {
      out.complete = false;
      if (r.open_lb) note(*r.open_lb);
    }
    // Earliest subtree wins ties: that is the lexicographically first optimum.
    if (r.value && (!out.value || *r.value < *out.value)) {
      out.value = r.value;
      std::vector<Color> fc(F);
      for (int p = 0; p < F; ++p) fc[proto.order()[p]] = r.positions[p];
      out.face_colors = fc;
    }
  }
  out.open_lb = open ? *open : std::numeric_limits<std::int64_t>::max();
  if (!opt.checkpoint_path.empty()) {
    cp.nodes = budget.nodes;
    write_checkpoint(opt.checkpoint_path, c, split_depth, prefixes.size(), cp);
  }
  return out;
}

// First good coloring found by a randomized depth-first search.
std::optional<std::vector<Color>> random_good_coloring(const QuotientComplex& c, std::mt19937_64& rng,
                                                       std::uint64_t node_cap) {
  Engine e(c);
  std::uint64_t nodes = 0;
  std::optional<std::vector<Color>> out;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == e.size()) {
      out = e.face_colors();
      return true;
    }
    if (++nodes > node_cap) return true;
    const Color first = (rng() & 1) ? Color::Black : Color::White;
    for (Color col : {first, opposite(first)}) {
      const std::int64_t df = e.apply(i, col);
      bool stop = false;
      if (e.feasible(i)) stop = rec(i + 1);
      e.undo(i, df);
      if (stop) return true;
    }
    return false;
  };
  rec(0);
  return out;
}

// Faces touched by the swap at v, and the edges incident to them.
void swap_region(const QuotientComplex& c, int v, std::vector<int>& faces, std::vector<SideRef>& edges) {
  faces.clear();
  edges.clear();
  for (const Corner& k : c.vertices()[v].star)
    if (std::find(faces.begin(), faces.end(), k.face) == faces.end()) faces.push_back(k.face);
  for (int f : faces) {
    for (int s = 0; s < 3; ++s) {
      const SideRef a{f, s}, b = c.glued(a);
      const SideRef key = a < b ? a : b;
      if (std::find(edges.begin(), edges.end(), key) == edges.end()) edges.push_back(key);
    }
  }
}

std::int64_t swap_delta_on(const QuotientComplex& c, const std::vector<Color>& colors, int v) {
  std::vector<int> faces;
  std::vector<SideRef> edges;
  swap_region(c, v, faces, edges);
  auto col = [&](int f) {
    const bool flipped = std::find(faces.begin(), faces.end(), f) != faces.end();
    return flipped ? opposite(colors[f]) : colors[f];
  };
  std::int64_t delta = 0;
  for (const SideRef& e : edges) {
    const int g = c.glued(e).face;
    delta += (col(e.face) != col(g)) - (colors[e.face] != colors[g]);
  }
  return delta;
}

bool alternating_star(const QuotientComplex& c, const std::vector<Color>& colors, int v) {
  const auto& vo = c.vertices()[v];
  if (vo.degree != 6) return false;
  for (int j = 0; j < 6; ++j)
    if (colors[vo.star[j].face] == colors[vo.star[(j + 1) % 6].face]) return false;
  return true;
}

std::int64_t folds_of(const QuotientComplex& c, const std::vector<Color>& colors) {
  std::int64_t n = 0;
  for (int f = 0; f < c.face_count(); ++f)
    for (int s = 0; s < 3; ++s) {
      const SideRef o = c.glued({f, s});
      if (SideRef{f, s} < o && colors[f] != colors[o.face]) ++n;
    }
  return n;
}

// Normalizes so that the first face in search order is Black.
std::vector<Color> normalized(const QuotientComplex& c, std::vector<Color> colors) {
  const int first = search_face_order(c).front();
  if (colors[first] == Color::White)
    for (auto& x : colors) x = opposite(x);
  return colors;
}

}  // namespace

std::vector<int> search_face_order(const QuotientComplex& c) {
  const int F = c.face_count();
  const auto& vs = c.vertices();
  std::vector<int> order;
  std::vector<char> placed(F, 0);
  std::vector<int> placed_in_star(vs.size(), 0);
  auto place = [&](int f) {
    if (placed[f]) return;
    placed[f] = 1;
    order.push_back(f);
    for (int v : c.face_vertices()[f]) ++placed_in_star[v];
  };
  int start = 0;
  while (start < static_cast<int>(vs.size()) && vs[start].degree != 2) ++start;
  if (start == static_cast<int>(vs.size())) start = 0;
  for (const Corner& k : vs[start].star) place(k.face);
  while (static_cast<int>(order.size()) < F) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
      if (placed_in_star[v] == 0 || placed_in_star[v] >= vs[v].degree) continue;
      // Stars may repeat a face; "complete" means every star slot placed.
      bool incomplete = false;
      for (const Corner& k : vs[v].star) incomplete |= !placed[k.face];
      if (!incomplete) continue;
      if (best < 0 || placed_in_star[v] > placed_in_star[best]) best = v;
    }
    if (best < 0) {
      // Disconnected leftovers cannot happen on a sphere; keep it total anyway.
      for (int f = 0; f < F; ++f)
        if (!placed[f]) {
          place(f);
          break;
        }
      continue;
    }
    for (const Corner& k : vs[best].star) place(k.face);
  }
  return order;
}

std::uint64_t for_each_good_coloring(const QuotientComplex& c,
                                     const std::function<bool(const std::vector<Color>&)>& visit) {
  Engine e(c);
  std::uint64_t count = 0;
  auto leaf = [&]() -> bool {
    std::vector<Color> col = e.face_colors();
    ++count;
    if (!visit(col)) return false;
    for (auto& x : col) x = opposite(x);
    ++count;
    return visit(col);
  };
  enumerate_from(e, 0, leaf);
  return count;
}

Enumeration enumerate_good_colorings(ComplexPtr c, std::uint64_t cap) {
  Enumeration out;
  for_each_good_coloring(*c, [&](const std::vector<Color>& col) {
    if (out.colorings.size() >= cap) {
      out.truncated = true;
      return false;
    }
    out.colorings.emplace_back(c, col);
    return true;
  });
  return out;
}

bool swap_applicable(const FaceColoring& col, int v) {
  if (v < 0 || v >= col.complex().vertex_count()) throw DomainError("vertex_swap: vertex out of range");
  return alternating_star(col.complex(), col.colors(), v);
}

std::int64_t swap_fold_delta(const FaceColoring& col, int v) {
  if (!swap_applicable(col, v)) throw DomainError("vertex_swap: star is not alternating");
  return swap_delta_on(col.complex(), col.colors(), v);
}

FaceColoring vertex_swap(const FaceColoring& col, int v) {
  if (!swap_applicable(col, v)) throw DomainError("vertex_swap: star is not alternating");
  std::vector<Color> colors = col.colors();
  std::set<int> faces;
  for (const Corner& k : col.complex().vertices()[v].star) faces.insert(k.face);
  for (int f : faces) colors[f] = opposite(colors[f]);
  return FaceColoring(col.complex_ptr(), std::move(colors));
}

unsigned effective_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EISENFOLD_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

SearchReport min_fold_search(ComplexPtr cp, const SearchOptions& opt) {
  const QuotientComplex& c = *cp;
  const auto t0 = Clock::now();
  SearchReport rep;
  rep.beta = c.beta();
  rep.mode = opt.mode;
  const std::int64_t F = c.face_count();

  // Incumbents: the alternating coloring and, when defined, C(beta).
  std::vector<Color> best = normalized(c, alternating_coloring(cp).colors());
  std::int64_t best_fold = folds_of(c, best);
  std::vector<std::vector<Color>> starts{best};
  const EisensteinInt beta_big = to_big(c.beta());
  if (c.beta().a >= 1 && is_primitive(beta_big)) {
    const auto cf = continued_fraction_coloring(cp, CappedFlower::build(beta_big));
    const auto colors = normalized(c, cf.colors());
    starts.insert(starts.begin(), colors);
    const std::int64_t f = folds_of(c, colors);
    if (f < best_fold) {
      best_fold = f;
      best = colors;
    }
  }

  const std::int64_t floor_bound = isoperimetric_floor(F);
  std::int64_t lower = floor_bound;
  if (opt.mode == SearchMode::Exact) {
    const BnbOutcome b = branch_and_bound(c, best_fold, opt, opt.time_limit_seconds, opt.node_limit);
    rep.nodes_explored = b.nodes;
    rep.threads = b.threads;
    if (b.value && *b.value <= best_fold) {
      best_fold = *b.value;
      best = b.face_colors;
    }
    if (b.complete) {
      rep.status = SearchStatus::ProvedOptimal;
      lower = best_fold;
    } else {
      rep.status = SearchStatus::Incumbent;
      lower = std::max(floor_bound, std::min(best_fold, b.open_lb));
      rep.note = "budget exhausted";
    }
  } else {
    const double total = opt.time_limit_seconds;
    SearchOptions bnb_opt = opt;
    bnb_opt.checkpoint_path.clear();
    const BnbOutcome b = opt.anytime_bnb_nodes
                             ? branch_and_bound(c, best_fold, bnb_opt, total > 0 ? total / 4 : 0, opt.anytime_bnb_nodes)
                             : BnbOutcome{};
    rep.nodes_explored = b.nodes;
    rep.threads = b.threads;
    if (b.value && *b.value <= best_fold) {
      best_fold = *b.value;
      best = b.face_colors;
    }
    if (opt.anytime_bnb_nodes && b.complete) {
      rep.status = SearchStatus::ProvedOptimal;
      lower = best_fold;
    } else {
      lower = opt.anytime_bnb_nodes ? std::max(floor_bound, std::min(best_fold, b.open_lb)) : floor_bound;
      // Simulated annealing over vertex swaps, with restarts.
      std::mt19937_64 rng(opt.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const int V = c.vertex_count();
      std::vector<int> six;
      for (int v = 0; v < V; ++v)
        if (c.vertices()[v].degree == 6) six.push_back(v);
      if (!best.empty()) starts.push_back(best);
      for (int r = 0; r < opt.restarts && !six.empty() && best_fold > lower; ++r) {
        if (total > 0 && seconds_since(t0) > total) break;
        std::vector<Color> cur;
        if (r < static_cast<int>(starts.size())) {
          cur = starts[r];
        } else {
          auto g = random_good_coloring(c, rng, 2000000);
          if (!g) continue;
          cur = *g;
        }
        std::int64_t cur_fold = folds_of(c, cur);
        const double T0 = 3.0, T1 = 0.05;
        for (std::uint64_t m = 0; m < opt.anneal_moves; ++m) {
          if ((m & 4095) == 0 && total > 0 && seconds_since(t0) > total) break;
          const int v = six[rng() % six.size()];
          if (!alternating_star(c, cur, v)) continue;
          const std::int64_t delta = swap_delta_on(c, cur, v);
          const double T = T0 * std::pow(T1 / T0, static_cast<double>(m) / static_cast<double>(opt.anneal_moves));
          if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / T)) {
            std::set<int> faces;
            for (const Corner& k : c.vertices()[v].star) faces.insert(k.face);
            for (int f : faces) cur[f] = opposite(cur[f]);
            cur_fold += delta;
            if (cur_fold < best_fold) {
              best_fold = cur_fold;
              best = normalized(c, cur);
            }
          }
        }
      }
      rep.status = best_fold == lower ? SearchStatus::ProvedOptimal : SearchStatus::Incumbent;
    }
  }

  FaceColoring col(cp, best);
  if (fold_count(col) != best_fold || !is_good(col).good)
    throw InternalError("min_fold_search: reported coloring is inconsistent");
  rep.best_fold = best_fold;
  rep.best_coloring = col;
  rep.proven_lower_bound = std::min(lower, best_fold);
  rep.wall_time = seconds_since(t0);
  return rep;
}

std::vector<LatticePoint> fibonacci_betas(const std::vector<int>& indices) {
  std::vector<LatticePoint> out;
  for (int n : indices) {
    if (n < 1 || n > 80) throw DomainError("fibonacci_betas: index out of range");
    std::int64_t a = 1, b = 1;
    for (int k = 1; k < n; ++k) {
      const std::int64_t t = a + b;
      a = b;
      b = t;
    }
    out.push_back({a, b});
  }
  return out;
}

std::vector<IeEntry> ie_sweep(const std::vector<LatticePoint>& betas_in, std::int64_t b_max,
                              const IeSweepOptions& opt) {
  std::vector<LatticePoint> betas;
  std::int64_t b_min = b_max;
  for (const auto& b : betas_in) {
    const LatticePoint canon = to_lattice(canonicalize(to_big(b)));
    if (canon.a < 1 || !is_primitive(to_big(canon))) throw DomainError("ie_sweep: beta must be primitive and non-degenerate");
    betas.push_back(canon);
    b_min = std::min(b_min, canon.b);
  }
  // All primitive competitors, evaluated once.
  std::vector<LatticePoint> pool;
  for (std::int64_t b = b_min; b < b_max; ++b)
    for (std::int64_t a = 1; a <= b; ++a)
      if (std::gcd(a, b) == 1) pool.push_back({a, b});
  for (const auto& b : betas)
    if (std::find(pool.begin(), pool.end(), b) == pool.end()) pool.push_back(b);

  std::vector<BigRational> etas(pool.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= pool.size()) return;
        const auto& p = pool[i];
        const Approximant layer = approximant(BigInt(static_cast<long>(p.a)), BigInt(static_cast<long>(p.b)));
        if (opt.construct) {
          const auto col = continued_fraction_coloring(to_big(p));
          if (BigInt(static_cast<long>(fold_count(col))) != layer.folds || BigInt(col.face_count()) != layer.faces)
            throw InternalError("ie_sweep: construction disagrees with the layer formula");
        }
        etas[i] = layer.eta;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next = pool.size();
    }
  };
  const unsigned threads = effective_threads(opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (unsigned t = 0; t < threads; ++t) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  if (err) std::rethrow_exception(err);

  std::vector<IeEntry> out;
  for (const auto& beta : betas) {
    IeEntry e;
    e.beta = beta;
    const std::size_t self = static_cast<std::size_t>(std::find(pool.begin(), pool.end(), beta) - pool.begin());
    e.eta = etas[self];
    bool first = true;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& p = pool[i];
      if (p == beta || p.b < beta.b || p.b >= b_max) continue;
      ++e.competitors;
      if (etas[i] <= e.eta) e.violations.push_back(p);
      if (first || etas[i] < e.closest_eta) {
        e.closest = p;
        e.closest_eta = etas[i];
        first = false;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace eisenfold
