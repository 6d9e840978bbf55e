#include <doctest.h>
#include "refinery/search.hpp"

TEST_CASE("placeholder test_objects") { CHECK(true); }
