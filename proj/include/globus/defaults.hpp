#pragma once

// Built-in input data. Mirrors data/*.csv byte for byte.

#include <string_view>

namespace globus::defaults {

inline constexpr std::string_view kPopulationCsv = R"csv(# Population anchors (persons). UN WPP 2022 medium variant; EU27 from Eurostat projections. Approximate.
economy,year,population
CN,2000,1264100000
CN,2021,1425900000
CN,2030,1415600000
CN,2040,1377900000
CN,2050,1312600000
CN,2060,1232800000
CN,2070,1136800000
US,2000,282400000
US,2021,336900000
US,2030,352200000
US,2040,366000000
US,2050,375400000
US,2060,382900000
US,2070,389400000
CA,2000,30700000
CA,2021,38200000
CA,2030,41000000
CA,2040,43500000
CA,2050,45400000
CA,2060,46800000
CA,2070,47900000
UK,2000,58900000
UK,2021,67300000
UK,2030,69200000
UK,2040,70900000
UK,2050,72000000
UK,2060,72600000
UK,2070,73000000
EU27,2000,429000000
EU27,2021,447000000
EU27,2030,449000000
EU27,2040,447000000
EU27,2050,441000000
EU27,2060,435000000
EU27,2070,430000000
JP,2000,126800000
JP,2021,124600000
JP,2030,119000000
JP,2040,112600000
JP,2050,104900000
JP,2060,97400000
JP,2070,91000000
KR,2000,47400000
KR,2021,51800000
KR,2030,51300000
KR,2040,49800000
KR,2050,45800000
KR,2060,41700000
KR,2070,38000000
IN,2000,1057000000
IN,2021,1407600000
IN,2030,1514900000
IN,2040,1592000000
IN,2050,1668100000
IN,2060,1700000000
IN,2070,1699000000
AFR,2000,818000000
AFR,2021,1393700000
AFR,2030,1710700000
AFR,2040,2093000000
AFR,2050,2485100000
AFR,2060,2886000000
AFR,2070,3250000000
LAC,2000,523000000
LAC,2021,656100000
LAC,2030,695000000
LAC,2040,729000000
LAC,2050,749200000
LAC,2060,750000000
LAC,2070,738000000
AU,2000,19000000
AU,2021,25900000
AU,2030,28000000
AU,2040,30300000
AU,2050,32500000
AU,2060,34500000
AU,2070,36300000
NZ,2000,3860000
NZ,2021,5130000
NZ,2030,5500000
NZ,2040,5800000
NZ,2050,6000000
NZ,2060,6200000
NZ,2070,6300000
TR,2000,64100000
TR,2021,84800000
TR,2030,88700000
TR,2040,92000000
TR,2050,95800000
TR,2060,96000000
TR,2070,95000000
ID,2000,214100000
ID,2021,273800000
ID,2030,292200000
ID,2040,308800000
ID,2050,317200000
ID,2060,320000000
ID,2070,319000000
)csv";

inline constexpr std::string_view kFloorspaceCsv = R"csv(# Per-capita floorspace anchors. 2050/2070 values from published national projections;
# 2000/2021 (and China 2030) values are approximate historical estimates.
economy,building_type,year,value,unit
CN,residential,2000,22.0,m2
CN,residential,2021,38.5,m2
CN,residential,2030,41.2,m2
CN,residential,2070,52.6,m2
CN,non-residential,2000,4.5,m2
CN,non-residential,2021,9.8,m2
CN,non-residential,2030,11.6,m2
CN,non-residential,2070,22.0,m2
US,residential,2000,60.0,m2
US,residential,2021,66.0,m2
US,residential,2050,74.8,m2
US,residential,2070,82.8,m2
US,non-residential,2000,24.0,m2
US,non-residential,2021,26.5,m2
US,non-residential,2050,30.5,m2
US,non-residential,2070,32.7,m2
CA,residential,2000,52.0,m2
CA,residential,2021,58.0,m2
CA,residential,2050,67.8,m2
CA,non-residential,2000,19.0,m2
CA,non-residential,2021,20.0,m2
CA,non-residential,2050,21.3,m2
UK,residential,2000,36.0,m2
UK,residential,2021,38.5,m2
UK,residential,2050,40.5,m2
UK,non-residential,2000,9.0,m2
UK,non-residential,2021,9.5,m2
UK,non-residential,2050,10.0,m2
EU27,residential,2000,42.0,m2
EU27,residential,2021,46.0,m2
EU27,residential,2050,56.9,m2
EU27,non-residential,2000,15.5,m2
EU27,non-residential,2021,17.5,m2
EU27,non-residential,2050,20.3,m2
JP,residential,2000,36.0,m2
JP,residential,2021,41.5,m2
JP,residential,2050,49.0,m2
JP,non-residential,2000,14.0,m2
JP,non-residential,2021,15.5,m2
JP,non-residential,2050,19.5,m2
KR,residential,2000,22.0,m2
KR,residential,2021,33.0,m2
KR,residential,2050,41.9,m2
KR,residential,2070,52.4,m2
KR,non-residential,2000,14.0,m2
KR,non-residential,2021,24.0,m2
KR,non-residential,2050,39.2,m2
KR,non-residential,2070,47.2,m2
IN,residential,2000,9.0,m2
IN,residential,2021,17.0,m2
IN,residential,2050,28.9,m2
IN,residential,2070,48.8,m2
IN,non-residential,2000,0.6,m2
IN,non-residential,2021,1.0,m2
IN,non-residential,2050,2.2,m2
IN,non-residential,2070,4.1,m2
AFR,residential,2000,10.0,m2
AFR,residential,2021,14.0,m2
AFR,residential,2050,21.0,m2
AFR,non-residential,2000,1.0,m2
AFR,non-residential,2021,1.5,m2
AFR,non-residential,2050,2.3,m2
LAC,residential,2000,20.0,m2
LAC,residential,2021,27.0,m2
LAC,residential,2050,35.7,m2
LAC,residential,2070,40.4,m2
LAC,non-residential,2000,3.5,m2
LAC,non-residential,2021,5.0,m2
LAC,non-residential,2050,6.8,m2
AU,residential,2000,65.0,m2
AU,residential,2021,75.0,m2
AU,residential,2050,80.8,m2
AU,residential,2070,99.7,m2
AU,non-residential,2000,5.5,m2
AU,non-residential,2021,6.3,m2
AU,non-residential,2050,6.9,m2
NZ,residential,2000,50.0,m2
NZ,residential,2021,54.0,m2
NZ,residential,2050,66.0,m2
NZ,non-residential,2000,17.0,m2
NZ,non-residential,2021,18.5,m2
NZ,non-residential,2050,20.6,m2
TR,residential,2000,25.0,m2
TR,residential,2021,35.0,m2
TR,residential,2050,43.7,m2
TR,residential,2070,47.3,m2
TR,non-residential,2000,6.0,m2
TR,non-residential,2021,9.0,m2
TR,non-residential,2050,12.3,m2
ID,residential,2000,10.0,m2
ID,residential,2021,13.0,m2
ID,residential,2050,16.7,m2
ID,non-residential,2000,0.9,m2
ID,non-residential,2021,2.2,m2
ID,non-residential,2050,6.9,m2
ID,non-residential,2070,9.3,m2
)csv";

inline constexpr std::string_view kPolicyCsv = R"csv(# Renovation and lifetime parameters for the BAU and TEP scenarios. Rates in percent.
scenario,economy,building_type,vintage_from,vintage_to,average_lifetime,initial_lifetime,renovation_cycle,first_rate_min,first_rate_max,second_rate_min,second_rate_max,ramp_shape,ramp_start,ramp_end
BAU,US,residential,,,75,25,25,10,49.2,10,19.8,linear,2021,2070
BAU,US,non-residential,,,75,25,25,10,34.5,10,14.9,linear,2021,2070
BAU,CA,residential,,,75,25,25,0.6,34.9,0.6,5.5,linear,2021,2070
BAU,CA,non-residential,,,75,25,25,0.6,69.2,0.6,10.4,linear,2021,2070
BAU,EU27,residential,,,120,40,40,12.0,61.0,12.0,21.8,linear,2021,2070
BAU,EU27,non-residential,,,120,40,40,9.0,33.5,9.0,13.9,linear,2021,2070
BAU,JP,residential,,,50,25,25,1.4,35.7,,,linear,2021,2070
BAU,JP,non-residential,,,50,25,25,1.4,35.7,,,linear,2021,2070
BAU,KR,residential,,,50,25,25,3,37.3,,,linear,2021,2070
BAU,KR,non-residential,,,50,25,25,3,37.3,,,linear,2021,2070
BAU,CN,residential,,2030,35,35,,,,,,,2021,2070
BAU,CN,residential,2031,,50,50,,,,,,,2021,2070
BAU,CN,non-residential,,2030,35,35,,,,,,,2021,2070
BAU,CN,non-residential,2031,,50,50,,,,,,,2021,2070
BAU,IN,residential,,2030,35,35,,,,,,,2021,2070
BAU,IN,residential,2031,,50,50,,,,,,,2021,2070
BAU,IN,non-residential,,2030,35,35,,,,,,,2021,2070
BAU,IN,non-residential,2031,,50,50,,,,,,,2021,2070
BAU,AFR,residential,,2030,35,35,,,,,,,2021,2070
BAU,AFR,residential,2031,,50,50,,,,,,,2021,2070
BAU,AFR,non-residential,,2030,35,35,,,,,,,2021,2070
BAU,AFR,non-residential,2031,,50,50,,,,,,,2021,2070
TEP,US,residential,,,75,25,25,10.0,88.4,10.0,29.6,linear,2021,2070
TEP,US,non-residential,,,75,25,25,10.0,59.0,10.0,19.8,linear,2021,2070
TEP,CA,residential,,,75,25,50,0.6,69.2,0.6,10.4,linear,2021,2070
TEP,CA,non-residential,,,75,25,50,0.6,98.6,0.6,20.2,linear,2021,2070
TEP,EU27,residential,,,120,40,40,12.0,100.0,12.0,31.6,linear,2021,2070
TEP,EU27,non-residential,,,120,40,40,9.0,58.0,9.0,18.8,linear,2021,2070
TEP,JP,residential,,,50,25,25,1.4,70.0,,,linear,2021,2070
TEP,JP,non-residential,,,50,25,25,1.4,70.0,,,linear,2021,2070
TEP,KR,residential,,,50,25,25,3,100,,,linear,2021,2070
TEP,KR,non-residential,,,50,25,25,3,100,,,linear,2021,2070
TEP,CN,residential,,2030,35,35,30,0,49,,,annual:1.0,2021,2070
TEP,CN,residential,2031,,80,50,30,0,49,,,annual:1.0,2021,2070
TEP,CN,non-residential,,2030,35,35,30,0,73.5,,,annual:1.5,2021,2070
TEP,CN,non-residential,2031,,80,50,30,0,73.5,,,annual:1.5,2021,2070
TEP,IN,residential,,2030,35,35,30,0,49,,,annual:1.0,2021,2070
TEP,IN,residential,2031,,80,50,30,0,49,,,annual:1.0,2021,2070
TEP,IN,non-residential,,2030,35,35,30,0,73.5,,,annual:1.5,2021,2070
TEP,IN,non-residential,2031,,80,50,30,0,73.5,,,annual:1.5,2021,2070
TEP,AFR,residential,,2030,35,35,30,0,49,,,annual:1.0,2021,2070
TEP,AFR,residential,2031,,80,50,30,0,49,,,annual:1.0,2021,2070
TEP,AFR,non-residential,,2030,35,35,30,0,73.5,,,annual:1.5,2021,2070
TEP,AFR,non-residential,2031,,80,50,30,0,73.5,,,annual:1.5,2021,2070
)csv";

} // namespace globus::defaults
