#include "refl/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace refl {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec spec;
  auto lines = split_lines(text);
  size_t i = 0;
  int dim = 0;
  while (i < lines.size()) {
    const std::string& line = lines[i];
    if (line.empty()) {
      ++i;
      continue;
    }
    std::istringstream is(line);
    std::string key;
    is >> key;
    if (key == "group") {
      is >> spec.name;
      ++i;
    } else if (key == "rank") {
      is >> spec.rank;
      dim = spec.rank;
      ++i;
    } else if (key == "relation") {
      std::string rel;
      is >> rel;
      spec.relations.push_back(rel);
      ++i;
    } else if (key == "matrix") {
      if (dim == 0) throw std::invalid_argument("rank must precede matrices");
      SquareMatrix m(dim);
      ++i;
      for (int r = 0; r < dim; ++r, ++i) {
        if (i >= lines.size())
          throw std::invalid_argument("truncated matrix block");
        std::istringstream row(lines[i]);
        std::string entry;
        int c = 0;
        while (std::getline(row, entry, ';')) {
          if (c >= dim) throw std::invalid_argument("too many matrix entries");
          m.at(r, c++) = Cyclotomic::parse(entry);
        }
        if (c != dim) throw std::invalid_argument("too few matrix entries");
      }
      spec.generators.push_back(std::move(m));
    } else {
      throw std::invalid_argument("unknown generator-file directive: " + key);
    }
  }
  if (spec.name.empty() || spec.rank == 0 || spec.generators.empty())
    throw std::invalid_argument("incomplete generator file");
  return spec;
}

std::string GroupSpec::serialize() const {
  std::ostringstream os;
  os << "group " << name << "\nrank " << rank << "\n";
  for (const auto& rel : relations) os << "relation " << rel << "\n";
  for (const auto& m : generators) {
    os << "matrix\n";
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = 0; j < m.dim(); ++j) {
        os << m.at(i, j).to_string();
        if (j + 1 < m.dim()) os << "; ";
      }
      os << "\n";
    }
  }
  return os.str();
}

uint64_t GroupSpec::content_hash() const {
  std::string s = serialize();
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

const GroupSpec& GroupSpec::builtin(const std::string& name) {
  extern const char* kG4GeneratorData;
  extern const char* kG5GeneratorData;
  extern const char* kG25GeneratorData;
  static const std::map<std::string, GroupSpec> specs = [] {
    std::map<std::string, GroupSpec> m;
    m.emplace("g4", GroupSpec::parse(kG4GeneratorData));
    m.emplace("g5", GroupSpec::parse(kG5GeneratorData));
    m.emplace("g25", GroupSpec::parse(kG25GeneratorData));
    return m;
  }();
  auto it = specs.find(name);
  if (it == specs.end())
    throw std::invalid_argument("unknown group name: " + name);
  return it->second;
}

namespace {

// Expand a run-length word like "B2AB" to the letter sequence BBAB.
std::string expand_word(const std::string& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    char c = w[i];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad word: " + w);
    int count = 1;
    if (i + 1 < w.size() && std::isdigit(static_cast<unsigned char>(w[i + 1]))) {
      count = w[i + 1] - '0';
      ++i;
    }
    out.append(static_cast<size_t>(count), c);
  }
  return out;
}

std::string compress_word(const std::string& w) {
  if (w.empty()) return "e";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

SquareMatrix eval_word(const std::string& letters,
                       const std::vector<SquareMatrix>& gens, int dim) {
  SquareMatrix m = SquareMatrix::identity(dim);
  for (char c : letters) {
    int g = c - 'A';
    if (g < 0 || g >= static_cast<int>(gens.size()))
      throw std::invalid_argument("unknown generator letter in word");
    m = m * gens[g];
  }
  return m;
}

}  // namespace

FiniteMatrixGroup FiniteMatrixGroup::closure(const GroupSpec& spec,
                                             size_t bound) {
  int dim = spec.rank;
  for (const auto& g : spec.generators) {
    if (g.dim() != dim) throw DimensionMismatch();
    if (g.order(8) != 3 || g.fixed_space_rank() != 1)
      throw RelationViolation("generator is not an order-3 reflection");
  }
  for (const auto& rel : spec.relations) {
    auto eq = rel.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad relation: " + rel);
    SquareMatrix lhs =
        eval_word(expand_word(rel.substr(0, eq)), spec.generators, dim);
    SquareMatrix rhs =
        eval_word(expand_word(rel.substr(eq + 1)), spec.generators, dim);
    if (lhs != rhs) throw RelationViolation(rel);
  }

  FiniteMatrixGroup g;
  g.spec_ = spec;
  std::unordered_map<SquareMatrix, ElemId, MatrixHash> intern;
  std::vector<std::string> words;        // letter sequences
  std::vector<int> parent, last_gen;     // element = parent * generator

  g.elements_.push_back(SquareMatrix::identity(dim));
  intern.emplace(g.elements_[0], 0);
  words.emplace_back("");
  parent.push_back(-1);
  last_gen.push_back(-1);

  for (size_t head = 0; head < g.elements_.size(); ++head) {
    for (size_t s = 0; s < spec.generators.size(); ++s) {
      SquareMatrix next = g.elements_[head] * spec.generators[s];
      if (intern.count(next)) continue;
      if (g.elements_.size() >= bound) throw ClosureBoundExceeded();
      ElemId id = static_cast<ElemId>(g.elements_.size());
      intern.emplace(next, id);
      g.elements_.push_back(std::move(next));
      words.push_back(words[head] + static_cast<char>('A' + s));
      parent.push_back(static_cast<int>(head));
      last_gen.push_back(static_cast<int>(s));
    }
  }

  size_t n = g.elements_.size();
  g.names_.reserve(n);
  for (const auto& w : words) g.names_.push_back(compress_word(w));

  // Cayley table: generator rows by matrix products, the rest by the
  // recursion (g' * s) * h = g' * (s * h) over BFS parents.
  g.cayley_.assign(n * n, 0);
  std::vector<std::vector<ElemId>> gen_row(spec.generators.size(),
                                           std::vector<ElemId>(n));
  for (size_t s = 0; s < spec.generators.size(); ++s)
    for (size_t h = 0; h < n; ++h)
      gen_row[s][h] = intern.at(spec.generators[s] * g.elements_[h]);
  for (size_t h = 0; h < n; ++h) g.cayley_[h] = static_cast<ElemId>(h);
  for (size_t e = 1; e < n; ++e) {
    const ElemId* prow = &g.cayley_[static_cast<size_t>(parent[e]) * n];
    const std::vector<ElemId>& srow = gen_row[static_cast<size_t>(last_gen[e])];
    ElemId* row = &g.cayley_[e * n];
    for (size_t h = 0; h < n; ++h) row[h] = prow[srow[h]];
  }

  g.gen_ids_.resize(spec.generators.size());
  for (size_t s = 0; s < spec.generators.size(); ++s)
    g.gen_ids_[s] = intern.at(spec.generators[s]);

  g.inverse_.assign(n, 0);
  for (size_t e = 0; e < n; ++e)
    for (size_t h = 0; h < n; ++h)
      if (g.cayley_[e * n + h] == 0) {
        g.inverse_[e] = static_cast<ElemId>(h);
        break;
      }
  return g;
}

ElemId FiniteMatrixGroup::id_of(const std::string& name) const {
  if (name == "e" || name == "1") return 0;
  std::string letters = expand_word(name);
  ElemId id = 0;
  for (char c : letters) {
    size_t gidx = static_cast<size_t>(c - 'A');
    if (gidx >= spec_.generators.size())
      throw std::invalid_argument("unknown generator letter: " + name);
    // generator ids are the first elements after the identity in BFS order
    ElemId gen_id = gen_ids_[gidx];
    id = mul(id, gen_id);
  }
  return id;
}

int FiniteMatrixGroup::element_order(ElemId id) const {
  ElemId p = id;
  int k = 1;
  while (p != 0) {
    p = mul(p, id);
    ++k;
  }
  return k;
}

std::vector<std::vector<ElemId>> FiniteMatrixGroup::conjugacy_classes(
    const std::vector<ElemId>& subset) const {
  std::vector<char> in_subset(size(), 0), seen(size(), 0);
  for (ElemId e : subset) in_subset[e] = 1;
  std::vector<std::vector<ElemId>> classes;
  std::vector<ElemId> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (ElemId start : sorted) {
    if (seen[start]) continue;
    std::vector<ElemId> cls;
    std::queue<ElemId> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      ElemId x = q.front();
      q.pop();
      cls.push_back(x);
      for (size_t s = 0; s < spec_.generators.size(); ++s) {
        ElemId y = conj(x, gen_ids_[s]);
        if (!in_subset[y])
          throw std::invalid_argument(
              "subset not closed under conjugation");
        if (!seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<ElemId> FiniteMatrixGroup::subgroup(
    const std::vector<ElemId>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<ElemId> members{0};
  seen[0] = 1;
  for (size_t head = 0; head < members.size(); ++head)
    for (ElemId s : gens) {
      ElemId y = mul(members[head], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace refl
