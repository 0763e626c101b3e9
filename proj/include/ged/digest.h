#ifndef GED_DIGEST_H_
#define GED_DIGEST_H_

#include <string>
#include <string_view>

namespace ged {

// Lower-case hex SHA-256.
std::string Sha256Hex(std::string_view data);
std::string Sha256File(const std::string& path);

}  // namespace ged

#endif  // GED_DIGEST_H_
