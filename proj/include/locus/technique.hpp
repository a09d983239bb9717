#pragma once

#include <string>
#include <vector>

namespace locus {

enum class Family { Sbfl, Mbfl, Ps, St };
enum class Technique { Tarantula, Ochiai, DStar, Metallaxis, Muse, Ps, St };

const char* family_name(Family family);
Family family_from_name(const std::string& name);

const char* technique_name(Technique technique);
Technique technique_from_name(const std::string& name);

Family technique_family(Technique technique);
std::vector<Technique> family_techniques(Family family);

}  // namespace locus
