#pragma once

#include "ocha/cochain.hpp"
#include "ocha/fixtures.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ocha {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct NamedCochain {
  std::string name;
  std::variant<OCCochain, SymCochain> value;
};

/// Which named cochains play which part. `l` and `q` form an OCHA; `m` names
/// an open-only A-infinity structure; `inputs` are test arguments.
struct Roles {
  std::optional<std::string> l;
  std::optional<std::string> q;
  std::optional<std::string> m;
  std::vector<std::string> inputs;
};

/// In-memory form of a structure file (JSON, canonical field order,
/// coefficients as "p/q" strings).
struct StructureFile {
  std::vector<SpacePtr> spaces;
  std::vector<NamedCochain> cochains;
  Roles roles;

  const NamedCochain* find(const std::string& name) const;
  /// Throws FormatError when missing or of the other kind.
  const OCCochain& open_closed(const std::string& name) const;
  const SymCochain& closed(const std::string& name) const;

  /// Adds a cochain, registering its spaces (by name) when new.
  void add(const std::string& name, const OCCochain& c);
  void add(const std::string& name, const SymCochain& c);
};

StructureFile parse_structure(std::string_view text);
std::string emit_structure(const StructureFile& file);

StructureFile read_structure_file(const std::filesystem::path& path);
void write_structure_file(const std::filesystem::path& path, const StructureFile& file);

/// File holding l and q with roles set, plus any inputs.
StructureFile to_structure_file(const OchaData& data);

/// Emits a single cochain as a structure file containing only it.
std::string emit_cochain(const std::string& name, const OCCochain& c);

}  // namespace ocha
