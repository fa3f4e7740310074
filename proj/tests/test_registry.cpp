#include <qcert/registry.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

using qcert::builtin_registry;
using qcert::Limits;

TEST_CASE("registry ids are unique and statements are filled in") {
  const auto items = builtin_registry();
  CHECK(items.size() >= 40);

  std::set<std::string> ids;
  for (const auto& item : items) {
    CHECK(ids.insert(item.id).second);
    CHECK_FALSE(item.id.empty());
    CHECK_FALSE(item.statement.empty());
    CHECK(item.run != nullptr);
  }
}

TEST_CASE("only the two deep prime-power instances are marked slow") {
  std::set<std::string> slow;
  for (const auto& item : builtin_registry())
    if (item.slow) slow.insert(item.id);
  CHECK(slow == std::set<std::string>{"mod7.pod3.deep.155004", "mod11.pod3.deep.26411"});
}

TEST_CASE("spot-checked registry items run green") {
  const Limits limits{};
  const std::set<std::string> picks{"exact.psi-dissection", "poch-power.p3.a1",
                                    "mod9.pod3-vs-pod.6x", "tri4.progression-shift",
                                    "squares-from-triangles"};
  std::size_t seen = 0;
  for (const auto& item : builtin_registry()) {
    if (!picks.count(item.id)) continue;
    seen++;
    const auto result = item.run(limits);
    INFO(item.id);
    CHECK(result.all_pass());
    CHECK(result.certificates.size() + result.checks.size() > 0);
  }
  CHECK(seen == picks.size());
}
