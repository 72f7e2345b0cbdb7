#include "tamehecke/config.hpp"

#include <fstream>

namespace tamehecke {

namespace {

using nlohmann::json;

template <class T>
T get_field(const json& obj, const std::string& key, const std::string& path) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    if (!obj.contains(key)) throw ConfigError(path + key + ": required field is missing");
    throw ConfigError(path + key + ": wrong type (" + std::string(e.what()) + ")");
  }
}

template <class T>
T get_or(const json& obj, const std::string& key, const std::string& path, T fallback) {
  if (!obj.contains(key)) return fallback;
  return get_field<T>(obj, key, path);
}

IntMatrix matrix_field(const json& obj, const std::string& key, const std::string& path, int rows, int cols) {
  auto rows_v = get_field<std::vector<IntVec>>(obj, key, path);
  if (static_cast<int>(rows_v.size()) != rows) throw ConfigError(path + key + ": expected " + std::to_string(rows) + " rows");
  for (const auto& r : rows_v)
    if (static_cast<int>(r.size()) != cols)
      throw ConfigError(path + key + ": expected " + std::to_string(cols) + " columns");
  return IntMatrix(rows_v);
}

RootDatum parse_group(const json& g) {
  if (!g.is_object()) throw ConfigError("group: expected an object");
  try {
    if (g.contains("preset")) {
      auto name = get_field<std::string>(g, "preset", "group.");
      auto params = get_or<std::vector<Int>>(g, "params", "group.", {});
      return build_preset(name, params);
    }
    int rank = get_field<int>(g, "rank", "group.");
    if (rank < 1) throw ConfigError("group.rank: must be positive");
    auto roots = get_field<std::vector<IntVec>>(g, "roots", "group.");
    auto coroots = get_field<std::vector<IntVec>>(g, "coroots", "group.");
    auto simple = get_field<std::vector<int>>(g, "simple_indices", "group.");
    IntMatrix pairing =
        g.contains("pairing") ? matrix_field(g, "pairing", "group.", rank, rank) : IntMatrix::identity(rank);
    return RootDatum(rank, roots, coroots, simple, pairing);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("group: ") + e.what());
  }
}

std::map<int, Int> parse_depth(const json& c, const RootDatum& d, const std::string& path) {
  std::map<int, Int> depth;
  if (!c.contains("depth")) return depth;
  const json& dj = c.at("depth");
  if (!dj.is_object()) throw ConfigError(path + "depth: expected an object keyed by root labels");
  for (const auto& [label, value] : dj.items()) {
    int idx = -1;
    for (int i = 0; i < d.num_roots(); ++i)
      if (d.label(i) == label) idx = i;
    if (idx < 0) throw ConfigError(path + "depth: unknown root label '" + label + "'");
    if (!value.is_number_integer()) throw ConfigError(path + "depth." + label + ": expected an integer");
    depth[idx] = value.get<Int>();
  }
  return depth;
}

}  // namespace

JobConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object at top level");
  JobConfig cfg;
  if (!doc.contains("group")) throw ConfigError("group: required field is missing");
  RootDatum d = parse_group(doc.at("group"));
  const int r = d.rank();

  Int n = get_or<Int>(doc, "n", "", 1);
  Int p = get_field<Int>(doc, "p", "");
  Int f = get_or<Int>(doc, "f", "", 1);
  Int eps_power = get_or<Int>(doc, "eps_power", "", 1);
  if (n < 1) throw ConfigError("n: must be positive");
  if (f < 1) throw ConfigError("f: must be positive");

  IntMatrix D;
  try {
    if (doc.contains("D")) {
      if (doc.contains("cover_multiplier")) throw ConfigError("D: give either D or cover_multiplier, not both");
      D = matrix_field(doc, "D", "", r, r);
    } else {
      D = standard_form(d, get_or<Int>(doc, "cover_multiplier", "", 1));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("cover_multiplier: ") + e.what());
  }

  std::optional<TameField> field;
  try {
    field.emplace(p, f, n, eps_power);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("p/f/n: ") + e.what());
  }
  std::optional<QuadraticCover> cover;
  try {
    cover.emplace(d, D, n);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("D: ") + e.what());
  }
  cfg.context = std::make_shared<CoverContext>(CoverContext{*cover, *field});
  cfg.warnings = bad_prime_check(d, p);

  if (!doc.contains("characters") || !doc.at("characters").is_array() || doc.at("characters").empty())
    throw ConfigError("characters: expected a nonempty list");
  const json& chars = doc.at("characters");
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::string path = "characters[" + std::to_string(i) + "].";
    const json& c = chars[i];
    if (!c.is_object()) throw ConfigError(path + ": expected an object");
    CharacterSpec spec;
    spec.m = get_field<IntVec>(c, "m", path);
    if (static_cast<int>(spec.m.size()) != r)
      throw ConfigError(path + "m: expected " + std::to_string(r) + " entries");
    spec.depth = parse_depth(c, d, path);
    try {
      GenuineCharacter(cfg.context, spec.m, spec.depth);
    } catch (const std::exception& e) {
      throw ConfigError(path + "depth: " + e.what());
    }
    cfg.characters.push_back(std::move(spec));
  }

  auto tasks = get_or<std::vector<std::string>>(doc, "tasks", "",
                                                {"chi-report", "hecke-check", "shimura-check"});
  for (const auto& t : tasks) {
    if (std::find(known_tasks().begin(), known_tasks().end(), t) == known_tasks().end())
      throw ConfigError("tasks: unknown task '" + t + "'");
    cfg.tasks.insert(t);
  }

  Int seed = get_or<Int>(doc, "seed", "", 1);
  if (seed < 0) throw ConfigError("seed: must be nonnegative");
  cfg.seed = static_cast<std::uint64_t>(seed);

  if (doc.contains("bounds")) {
    const json& b = doc.at("bounds");
    if (!b.is_object()) throw ConfigError("bounds: expected an object");
    cfg.bounds.word_length = get_or<int>(b, "word_length", "bounds.", cfg.bounds.word_length);
    cfg.bounds.offset = get_or<int>(b, "offset", "bounds.", cfg.bounds.offset);
    cfg.bounds.samples = get_or<int>(b, "samples", "bounds.", cfg.bounds.samples);
    cfg.bounds.window = get_or<int>(b, "window", "bounds.", cfg.bounds.window);
  }
  if (cfg.bounds.word_length < 0) throw ConfigError("bounds.word_length: must be nonnegative");
  if (cfg.bounds.offset < 0) throw ConfigError("bounds.offset: must be nonnegative");
  if (cfg.bounds.samples < 0) throw ConfigError("bounds.samples: must be nonnegative");
  if (cfg.bounds.window < 1) throw ConfigError("bounds.window: must be positive");
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: malformed JSON (" + std::string(e.what()) + ")");
  }
  return parse_config(doc);
}

}  // namespace tamehecke
