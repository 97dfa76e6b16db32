#include "ocha/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace ocha {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormat = "ocha-structure";
constexpr int kVersion = 1;

void register_space(std::vector<SpacePtr>& spaces, const SpacePtr& s) {
  for (const auto& t : spaces) {
    if (t->name() != s->name()) continue;
    if (!(*t == *s))
      throw FormatError("two different spaces share the name '" + s->name() + "'");
    return;
  }
  spaces.push_back(s);
}

json labels(const GradedSpace& s, const std::vector<int>& idx) {
  json a = json::array();
  for (int i : idx) a.push_back(s.label(i));
  return a;
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(where + ": bad field '" + key + "': " + e.what());
  }
}

const SpacePtr& lookup(const std::map<std::string, SpacePtr>& spaces, const std::string& name,
                       const std::string& where) {
  auto it = spaces.find(name);
  if (it == spaces.end()) throw FormatError(where + ": unknown space '" + name + "'");
  return it->second;
}

Scalar coefficient(const json& e, const std::string& where) {
  try {
    return Scalar::parse(get<std::string>(e, "coefficient", where));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& ex) {
    throw FormatError(where + ": bad coefficient: " + ex.what());
  }
}

}  // namespace

const NamedCochain* StructureFile::find(const std::string& name) const {
  for (const auto& c : cochains)
    if (c.name == name) return &c;
  return nullptr;
}

const OCCochain& StructureFile::open_closed(const std::string& name) const {
  const auto* c = find(name);
  if (!c) throw FormatError("no cochain named '" + name + "'");
  if (const auto* p = std::get_if<OCCochain>(&c->value)) return *p;
  throw FormatError("cochain '" + name + "' is not an open-closed cochain");
}

const SymCochain& StructureFile::closed(const std::string& name) const {
  const auto* c = find(name);
  if (!c) throw FormatError("no cochain named '" + name + "'");
  if (const auto* p = std::get_if<SymCochain>(&c->value)) return *p;
  throw FormatError("cochain '" + name + "' is not a closed-string cochain");
}

void StructureFile::add(const std::string& name, const OCCochain& c) {
  if (find(name)) throw FormatError("duplicate cochain name '" + name + "'");
  register_space(spaces, c.closed_space());
  register_space(spaces, c.open_space());
  register_space(spaces, c.target_space());
  cochains.push_back({name, c});
}

void StructureFile::add(const std::string& name, const SymCochain& c) {
  if (find(name)) throw FormatError("duplicate cochain name '" + name + "'");
  register_space(spaces, c.source_space());
  register_space(spaces, c.target_space());
  cochains.push_back({name, c});
}

StructureFile parse_structure(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("not valid JSON: ") + e.what());
  }
  if (get<std::string>(root, "format", "file") != kFormat)
    throw FormatError("file: unexpected format tag");
  if (get<int>(root, "version", "file") != kVersion)
    throw FormatError("file: unsupported version");

  StructureFile f;
  std::map<std::string, SpacePtr> by_name;
  for (const auto& js : get<json>(root, "spaces", "file")) {
    const auto name = get<std::string>(js, "name", "space");
    const std::string where = "space '" + name + "'";
    std::vector<BasisElement> basis;
    for (const auto& b : get<json>(js, "basis", where))
      basis.push_back({get<std::string>(b, "label", where), get<int>(b, "degree", where)});
    SpacePtr s;
    try {
      s = make_space(name, std::move(basis), get<int>(js, "shift", where));
    } catch (const AlgebraError& e) {
      throw FormatError(e.what());
    }
    if (!by_name.emplace(name, s).second) throw FormatError("duplicate space '" + name + "'");
    f.spaces.push_back(s);
  }

  for (const auto& jc : get<json>(root, "cochains", "file")) {
    const auto name = get<std::string>(jc, "name", "cochain");
    const std::string where = "cochain '" + name + "'";
    const auto kind = get<std::string>(jc, "kind", where);
    try {
      if (kind == "open-closed") {
        OCCochain c(lookup(by_name, get<std::string>(jc, "closed", where), where),
                    lookup(by_name, get<std::string>(jc, "open", where), where),
                    lookup(by_name, get<std::string>(jc, "target", where), where));
        for (const auto& e : get<json>(jc, "entries", where)) {
          auto cl = get<std::vector<std::string>>(e, "closed", where);
          auto op = get<std::vector<std::string>>(e, "open", where);
          if (get<int>(e, "l", where) != static_cast<int>(cl.size()) ||
              get<int>(e, "k", where) != static_cast<int>(op.size()))
            throw FormatError(where + ": arity fields disagree with the input lists");
          c.add(cl, op, get<std::string>(e, "out", where), coefficient(e, where));
        }
        if (f.find(name)) throw FormatError("duplicate cochain name '" + name + "'");
        f.cochains.push_back({name, std::move(c)});
      } else if (kind == "closed") {
        SymCochain c(lookup(by_name, get<std::string>(jc, "source", where), where),
                     lookup(by_name, get<std::string>(jc, "target", where), where));
        for (const auto& e : get<json>(jc, "entries", where)) {
          auto cl = get<std::vector<std::string>>(e, "closed", where);
          if (get<int>(e, "l", where) != static_cast<int>(cl.size()))
            throw FormatError(where + ": arity field disagrees with the input list");
          c.add(cl, get<std::string>(e, "out", where), coefficient(e, where));
        }
        if (f.find(name)) throw FormatError("duplicate cochain name '" + name + "'");
        f.cochains.push_back({name, std::move(c)});
      } else {
        throw FormatError(where + ": unknown kind '" + kind + "'");
      }
    } catch (const AlgebraError& e) {
      throw FormatError(where + ": " + e.what());
    }
  }

  if (root.contains("roles")) {
    const json& r = root.at("roles");
    auto opt = [&](const char* key) -> std::optional<std::string> {
      if (!r.contains(key)) return std::nullopt;
      auto v = get<std::string>(r, key, "roles");
      if (!f.find(v)) throw FormatError("roles: unknown cochain '" + v + "'");
      return v;
    };
    f.roles.l = opt("l");
    f.roles.q = opt("q");
    f.roles.m = opt("m");
    if (r.contains("inputs")) {
      f.roles.inputs = get<std::vector<std::string>>(r, "inputs", "roles");
      for (const auto& v : f.roles.inputs)
        if (!f.find(v)) throw FormatError("roles: unknown cochain '" + v + "'");
    }
    if (f.roles.l) f.closed(*f.roles.l);
    if (f.roles.q) f.open_closed(*f.roles.q);
    if (f.roles.m) f.open_closed(*f.roles.m);
  }
  return f;
}

std::string emit_structure(const StructureFile& f) {
  json root;
  root["format"] = kFormat;
  root["version"] = kVersion;
  json spaces = json::array();
  for (const auto& s : f.spaces) {
    json js;
    js["name"] = s->name();
    js["shift"] = s->shift();
    json basis = json::array();
    for (const auto& b : s->basis()) {
      json jb;
      jb["label"] = b.label;
      jb["degree"] = b.degree;
      basis.push_back(std::move(jb));
    }
    js["basis"] = std::move(basis);
    spaces.push_back(std::move(js));
  }
  root["spaces"] = std::move(spaces);

  json cochains = json::array();
  for (const auto& nc : f.cochains) {
    json jc;
    jc["name"] = nc.name;
    if (const auto* c = std::get_if<OCCochain>(&nc.value)) {
      jc["kind"] = "open-closed";
      jc["closed"] = c->closed_space()->name();
      jc["open"] = c->open_space()->name();
      jc["target"] = c->target_space()->name();
      json entries = json::array();
      for (const auto& [k, v] : c->entries()) {
        json e;
        e["l"] = k.l();
        e["k"] = k.k();
        e["closed"] = labels(*c->closed_space(), k.closed);
        e["open"] = labels(*c->open_space(), k.open);
        e["out"] = c->target_space()->label(k.out);
        e["coefficient"] = v.to_string();
        entries.push_back(std::move(e));
      }
      jc["entries"] = std::move(entries);
    } else {
      const auto& s = std::get<SymCochain>(nc.value);
      jc["kind"] = "closed";
      jc["source"] = s.source_space()->name();
      jc["target"] = s.target_space()->name();
      json entries = json::array();
      for (const auto& [k, v] : s.entries()) {
        json e;
        e["l"] = k.l();
        e["closed"] = labels(*s.source_space(), k.closed);
        e["out"] = s.target_space()->label(k.out);
        e["coefficient"] = v.to_string();
        entries.push_back(std::move(e));
      }
      jc["entries"] = std::move(entries);
    }
    cochains.push_back(std::move(jc));
  }
  root["cochains"] = std::move(cochains);

  json roles = json::object();
  if (f.roles.l) roles["l"] = *f.roles.l;
  if (f.roles.q) roles["q"] = *f.roles.q;
  if (f.roles.m) roles["m"] = *f.roles.m;
  if (!f.roles.inputs.empty()) roles["inputs"] = f.roles.inputs;
  root["roles"] = std::move(roles);
  return root.dump(2) + "\n";
}

StructureFile read_structure_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_structure(ss.str());
}

void write_structure_file(const std::filesystem::path& path, const StructureFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << emit_structure(file);
  if (!out) throw FormatError("write failed for '" + path.string() + "'");
}

StructureFile to_structure_file(const OchaData& data) {
  StructureFile f;
  f.add("l", data.l);
  f.add("q", data.q);
  f.roles.l = "l";
  f.roles.q = "q";
  for (const auto& [name, c] : data.inputs) {
    f.add(name, c);
    f.roles.inputs.push_back(name);
  }
  return f;
}

std::string emit_cochain(const std::string& name, const OCCochain& c) {
  StructureFile f;
  f.add(name, c);
  return emit_structure(f);
}

}  // namespace ocha
