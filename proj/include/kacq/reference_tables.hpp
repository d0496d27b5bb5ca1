#pragma once

#include <map>
#include <string>
#include <utility>

// A_{(Q,alpha),3} for the g-loop quiver, keyed by (g, alpha)
inline const std::map<std::pair<int, int>, std::string>& gloop_rank3_table() {
  static const std::map<std::pair<int, int>, std::string> t = {
      {{1, 1}, "q"},
      {{1, 2}, "q^4+q^3+2q^2"},
      {{1, 3}, "q^7+q^6+3q^5+2q^4+2q^3"},
      {{1, 4}, "q^10+q^9+3q^8+3q^7+4q^6+2q^5+2q^4"},
      {{1, 5}, "q^13+q^12+3q^11+3q^10+5q^9+4q^8+4q^7+2q^6+2q^5"},
      {{2, 1}, "q^10+q^8+q^7+q^6+q^5+q^4"},
      {{2, 2}, "q^20+q^18+2q^17+3q^16+3q^15+4q^14+3q^13+3q^12+2q^11+2q^10"},
      {{2, 3}, "q^30+q^28+2q^27+3q^26+3q^25+5q^24+5q^23+7q^22+6q^21+7q^20+5q^19+4q^18+3q^17+2q^16"},
      {{2, 4}, "q^40+q^38+2q^37+3q^36+3q^35+5q^34+5q^33+7q^32+7q^31+9q^30+9q^29+10q^28+9q^27+9q^26+6q^25+5q^24+3q^23+2q^22"},
      {{2, 5}, "q^50+q^48+2q^47+3q^46+3q^45+5q^44+5q^43+7q^42+7q^41+9q^40+9q^39+11q^38+11q^37+13q^36+12q^35+13q^34+11q^33+10q^32+7q^31+5q^30+3q^29+2q^28"},
      {{3, 1}, "q^19+q^17+q^16+q^15+q^14+2q^13+q^12+2q^11+2q^10+q^9+q^8+q^7"},
      {{3, 2}, "q^38+q^36+q^35+q^34+q^33+2q^32+2q^31+3q^30+4q^29+4q^28+4q^27+5q^26+4q^25+4q^24+4q^23+5q^22+3q^21+4q^20+3q^19+2q^18+q^17+q^16"},
      {{3, 3}, "q^57+q^55+q^54+q^53+q^52+2q^51+2q^50+3q^49+4q^48+4q^47+4q^46+5q^45+4q^44+5q^43+5q^42+7q^41+6q^40+8q^39+8q^38+8q^37+7q^36+8q^35+7q^34+6q^33+6q^32+6q^31+4q^30+4q^29+3q^28+2q^27+q^26+q^25"},
      {{3, 4}, "q^76+q^74+q^73+q^72+q^71+2q^70+2q^69+3q^68+4q^67+4q^66+4q^65+5q^64+4q^63+5q^62+5q^61+7q^60+6q^59+8q^58+8q^57+8q^56+8q^55+9q^54+9q^53+9q^52+10q^51+11q^50+10q^49+11q^48+11q^47+11q^46+9q^45+10q^44+8q^43+7q^42+6q^41+6q^40+4q^39+4q^38+3q^37+2q^36+q^35+q^34"},
      {{3, 5}, "q^95+q^93+q^92+q^91+q^90+2q^89+2q^88+3q^87+4q^86+4q^85+4q^84+5q^83+4q^82+5q^81+5q^80+7q^79+6q^78+8q^77+8q^76+8q^75+8q^74+9q^73+9q^72+9q^71+10q^70+11q^69+10q^68+12q^67+12q^66+13q^65+12q^64+14q^63+13q^62+13q^61+13q^60+14q^59+13q^58+13q^57+13q^56+12q^55+10q^54+10q^53+8q^52+7q^51+6q^50+6q^49+4q^48+4q^47+3q^46+2q^45+q^44+q^43"},
  };
  return t;
}
