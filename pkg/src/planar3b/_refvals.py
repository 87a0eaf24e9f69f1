"""Frozen Bessel reference values (generated by tests/oracles.py).

Each entry is (x, value) with value the nearest double to an
arbitrary-precision evaluation; used by the validation suite."""

J0 = (
    (1e-06, 0.99999999999975),
    (1.599858719606058e-06, 0.9999999999993601),
    (2.5595479226995355e-06, 0.9999999999983622),
    (4.094915062380425e-06, 0.9999999999958079),
    (6.551285568595509e-06, 0.9999999999892701),
    (1.0481131341546858e-05, 0.9999999999725365),
    (1.676832936811008e-05, 0.9999999999297058),
    (2.6826957952797257e-05, 0.9999999998200786),
    (4.291934260128778e-05, 0.9999999995394825),
    (6.866488450043e-05, 0.9999999988212834),
    (0.00010985411419875582, 0.9999999969830184),
    (0.00017575106248547917, 0.999999992277891),
    (0.00028117686979742306, 0.9999999802348921),
    (0.00044984326689694455, 0.9999999494102595),
    (0.000719685673001152, 0.9999998705131372),
    (0.0011513953993264473, 0.999999668572186),
    (0.001842069969326716, 0.999999151694737),
    (0.0029470517025518106, 0.9999978287227442),
    (0.004714866363457393, 0.9999944425165151),
    (0.007543120063354617, 0.9999857753855127),
    (0.012067926406393287, 0.9999635916194597),
    (0.019306977288832503, 0.9999068123280563),
    (0.03088843596477481, 0.9997614903539446),
    (0.049417133613238344, 0.9993895799016564),
    (0.079060432109077, 0.9984379723720651),
    (0.1264855216855296, 0.9960043507177514),
    (0.2023589647725157, 0.9897888830752801),
    (0.3237457542817644, 0.9739683197795334),
    (0.5179474679231211, 0.9340487692491277),
    (0.8286427728546844, 0.8355657500550093),
    (1.3257113655901092, 0.6065929093650162),
    (2.120950887920191, 0.15472417880710204),
    (3.3932217718953286, -0.3630711856083413),
    (5.42867543932386, -0.03131782990123595),
    (8.685113737513527, -0.008502945407804084),
    (13.894954943731376, 0.18416549773423363),
    (22.22996482526195, -0.1440574814770947),
    (35.56480306223129, -0.13060808664438722),
    (56.89866029018297, 0.0958073395719745),
    (91.02981779915218, -0.05436189636372949),
    (145.63484775012438, 0.062433408595161236),
    (232.9951810515372, 0.050397213276013764),
    (372.759372031494, 0.012413562717525738),
    (596.3623316594643, 0.007922306039128427),
    (954.095476349994, -0.004202647367253417),
    (1526.4179671752333, 0.007750201114957013),
    (2442.053094548651, -0.01564335919938366),
    (3906.939937054617, -0.005157916462791104),
    (6250.551925273973, -0.004226141206847446),
    (10000.0, -0.0070961603533888015),
)

J1 = (
    (1e-06, 4.999999999999375e-07),
    (1.599858719606058e-06, 7.999293598027731e-07),
    (2.5595479226995355e-06, 1.2797739613487198e-06),
    (4.094915062380425e-06, 2.047457531185921e-06),
    (6.551285568595509e-06, 3.275642784280181e-06),
    (1.0481131341546858e-05, 5.2405656707014666e-06),
    (1.676832936811008e-05, 8.38416468376036e-06),
    (2.6826957952797257e-05, 1.3413478975191942e-05),
    (4.291934260128778e-05, 2.145967129570261e-05),
    (6.866488450043e-05, 3.433244222998089e-05),
    (0.00010985411419875582, 5.492705701652095e-05),
    (0.00017575106248547917, 8.787553090344737e-05),
    (0.00028117686979742306, 0.00014058843350933873),
    (0.00044984326689694455, 0.00022492162775910872),
    (0.000719685673001152, 0.0003598428132031157),
    (0.0011513953993264473, 0.000575697604262106),
    (0.001842069969326716, 0.0009210345940039178),
    (0.0029470517025518106, 0.0014735242515590324),
    (0.004714866363457393, 0.002357426631027676),
    (0.007543120063354617, 0.0037715332071517776),
    (0.012067926406393287, 0.006033853359449137),
    (0.019306977288832503, 0.009653038847856758),
    (0.03088843596477481, 0.015442376148294999),
    (0.049417133613238344, 0.024701025120037513),
    (0.079060432109077, 0.03949933838884637),
    (0.1264855216855296, 0.06311637077047733),
    (0.2023589647725157, 0.10066246355126295),
    (0.3237457542817644, 0.15976135500389402),
    (0.5179474679231211, 0.2503859191553982),
    (0.8286427728546844, 0.37976272567652836),
    (1.3257113655901092, 0.5275155350013793),
    (2.120950887920191, 0.5660276838407696),
    (3.3932217718953286, 0.18205147279428258),
    (5.42867543932386, -0.344557564830902),
    (8.685113737513527, 0.27033797278624083),
    (13.894954943731376, 0.1156393806672301),
    (22.22996482526195, 0.08554270074637395),
    (35.56480306223129, -0.0308220811758703),
    (56.89866029018297, -0.043983783113533514),
    (91.02981779915218, 0.06324927640731198),
    (145.63484775012438, 0.021971911364159033),
    (232.9951810515372, -0.013764329711285517),
    (372.759372031494, 0.039434437550764895),
    (596.3623316594643, -0.03169102966155873),
    (954.095476349994, -0.025489206696364904),
    (1526.4179671752333, -0.018891962928043956),
    (2442.053094548651, -0.004000163963365446),
    (3906.939937054617, -0.011677208398873394),
    (6250.551925273973, -0.009164938440123662),
    (10000.0, 0.0036474507555295803),
)

Y0 = (
    (1e-06, -8.869031481659444),
    (1.599858719606058e-06, -8.569874094358203),
    (2.5595479226995355e-06, -8.27071670705178),
    (4.094915062380425e-06, -7.971559319732557),
    (6.551285568595509e-06, -7.672401932381764),
    (1.0481131341546858e-05, -7.373244544953213),
    (1.676832936811008e-05, -7.074087157333448),
    (2.6826957952797257e-05, -6.7749297692442445),
    (4.291934260128778e-05, -6.475772380004634),
    (6.866488450043e-05, -6.1766149879514165),
    (0.00010985411419875582, -5.877457589031713),
    (0.00017575106248547917, -5.578300173394549),
    (0.00028117686979742306, -5.279142717163427),
    (0.00044984326689694455, -4.979985162648787),
    (0.000719685673001152, -4.680827370954026),
    (0.0011513953993264473, -4.381669008994913),
    (0.001842069969326716, -4.082509281632858),
    (0.0029470517025518106, -3.783346300608217),
    (0.004714866363457393, -3.484175608925667),
    (0.007543120063354617, -3.1849867613681973),
    (0.012067926406393287, -2.885755487164618),
    (0.019306977288832503, -2.586425972979785),
    (0.03088843596477481, -2.286871518419287),
    (0.049417133613238344, -1.9868092315789159),
    (0.079060432109077, -1.6856213013925623),
    (0.1264855216855296, -1.3820000226762157),
    (0.2023589647725157, -1.0733074271810874),
    (0.3237457542817644, -0.7546526982163759),
    (0.5179474679231211, -0.41850309952139264),
    (0.8286427728546844, -0.05924398123642203),
    (1.3257113655901092, 0.30040526545987345),
    (2.120950887920191, 0.5192576360280934),
    (3.3932217718953286, 0.23233092431780303),
    (5.42867543932386, -0.34031787344218767),
    (8.685113737513527, 0.2703865580207205),
    (13.894954943731376, 0.10895077676509139),
    (22.22996482526195, 0.08875885536885872),
    (35.56480306223129, -0.028983383752009456),
    (56.89866029018297, -0.0448239004101324),
    (91.02981779915218, 0.06354690288233265),
    (145.63484775012438, 0.021757436531020313),
    (232.9951810515372, -0.0138724480347937),
    (372.759372031494, 0.0394177512143796),
    (596.3623316594643, -0.03169766070797832),
    (954.095476349994, -0.025487000772208983),
    (1526.4179671752333, -0.018894500603133715),
    (2442.053094548651, -0.003996960968361199),
    (3906.939937054617, -0.011676548206545323),
    (6250.551925273973, -0.009164600349361281),
    (10000.0, 0.0036478055589866058),
)

Y1 = (
    (1e-06, -636619.772372175),
    (1.599858719606058e-06, -397922.4943910763),
    (2.5595479226995355e-06, -248723.5213491443),
    (4.094915062380425e-06, -155465.92853308417),
    (6.551285568595509e-06, -97174.78590626306),
    (1.0481131341546858e-05, -60739.60453739532),
    (1.676832936811008e-05, -37965.6052449439),
    (2.6826957952797257e-05, -23730.59875220225),
    (4.291934260128778e-05, -14832.934058176073),
    (6.866488450043e-05, -9271.40258533379),
    (0.00010985411419875582, -5795.138528911141),
    (0.00017575106248547917, -3622.281734363406),
    (0.00028117686979742306, -2264.126469914663),
    (0.00044984326689694455, -1415.204706380968),
    (0.000719685673001152, -884.5821042374577),
    (0.0011513953993264473, -552.9142188237435),
    (0.001842069969326716, -345.60426555417973),
    (0.0029470517025518106, -216.0252511049129),
    (0.004714866363457393, -135.032891278488),
    (0.007543120063354617, -84.41061977056879),
    (0.012067926406393287, -52.77237092488248),
    (0.019306977288832503, -33.00160212562503),
    (0.03088843596477481, -20.650534921548022),
    (0.049417133613238344, -12.939546593043636),
    (0.079060432109077, -8.13160111410239),
    (0.1264855216855296, -5.140911534575593),
    (0.2023589647725157, -3.287604317043274),
    (0.3237457542817644, -2.1427629651910607),
    (0.5179474679231211, -1.4280920609612524),
    (0.8286427728546844, -0.9463847841069295),
    (1.3257113655901092, -0.5304076069367822),
    (2.120950887920191, -0.04035256877950587),
    (3.3932217718953286, 0.4002491996499296),
    (5.42867543932386, 0.0003422559658724335),
    (8.685113737513527, 0.024033288308533147),
    (13.894954943731376, -0.18036827197582528),
    (22.22996482526195, 0.14608918188840783),
    (35.56480306223129, 0.13021358565719005),
    (56.89866029018297, -0.0962048989829265),
    (91.02981779915218, 0.05471175016323708),
    (145.63484775012438, -0.062359078811561934),
    (232.9951810515372, -0.05042709899707465),
    (372.759372031494, -0.012360701062135594),
    (596.3623316594643, -0.0079488846456441),
    (954.095476349994, 0.004189291317888464),
    (1526.4179671752333, -0.007756390693540925),
    (2442.053094548651, 0.015642541166525477),
    (3906.939937054617, 0.0051564221708189865),
    (6250.551925273973, 0.004225408117084369),
    (10000.0, 0.007096342752536495),
)

K0 = (
    (1e-06, 13.93144207362642),
    (1.51534738863033e-06, 13.515797361528822),
    (2.2962777082287603e-06, 13.100152649436879),
    (3.479658428734491e-06, 12.684507937357518),
    (5.272891313308328e-06, 12.268863225306127),
    (7.990262082153326e-06, 11.85321851331685),
    (1.2108022780662986e-05, 11.437573801465351),
    (1.8347860702154204e-05, 11.021929089919082),
    (2.7803382801962425e-05, 10.606284379048102),
    (4.2131783524043186e-05, 10.190639669668998),
    (6.384428814149721e-05, 9.774994963580681),
    (9.674627531418014e-05, 9.359350264738984),
    (0.00014660421565705384, 8.943705581825824),
    (0.0002221563153581143, 8.528060933854736),
    (0.00033664399234565456, 8.11241636236758),
    (0.0005101325946990764, 7.696771957891384),
    (0.00077302809523246, 7.281127917130836),
    (0.0011714061054483864, 6.865484666123952),
    (0.0017750871829168371, 6.449843124271685),
    (0.002689873727224198, 6.034205267522625),
    (0.004076093128294521, 5.618575322633404),
    (0.006176697077775135, 5.202962282278161),
    (0.009359841787167143, 4.787385158691798),
    (0.014183411810176771, 4.37188384975289),
    (0.02149279604841995, 3.9565413417888786),
    (0.03256905236633745, 3.541528389176196),
    (0.04935342845349392, 3.12719167101273),
    (0.07478758892695585, 2.714223232704745),
    (0.11332917758242113, 2.303974581856639),
    (0.17173307330514478, 1.8990091650419652),
    (0.2602352641744122, 1.503998261075669),
    (0.39434682799621956, 1.1269837175942234),
    (0.5975724360187252, 0.7806935196737125),
    (0.9055298304384403, 0.48278752864112556),
    (1.372192263881756, 0.2527625832421716),
    (2.07934796377196, 0.10335299665885049),
    (3.1509345069556334, 0.02919362051642097),
    (4.774760376860415, 0.004726654247146176),
    (7.235420668411001, 0.0003303530745126405),
    (10.964175815518526, 6.481067186161593e-06),
    (16.614535190529818, 1.8579761762711577e-08),
    (25.176792514276084, 2.892694730428027e-12),
    (38.1515867905959, 5.456011179051218e-18),
    (57.81290741523289, 1.2831866424178708e-26),
    (87.60663828080021, 1.199763587649703e-39),
    (132.7544905454925, 2.4076050099868066e-59),
    (201.1691705770619, 3.796202107515202e-89),
    (304.8411773068802, 2.9174550330765257e-134),
    (461.94028197897626, 1.4045402730970202e-202),
    (700.0, 4.669776431685377e-306),
)

K1 = (
    (1e-06, 999999.9999927843),
    (1.51534738863033e-06, 659914.6885307753),
    (2.2962777082287603e-06, 435487.39613707113),
    (3.479658428734491e-06, 287384.52937286394),
    (5.272891313308328e-06, 189649.27217418203),
    (7.990262082153326e-06, 125152.34035179045),
    (1.2108022780662986e-05, 82589.8676637768),
    (1.8347860702154204e-05, 54502.266738007056),
    (2.7803382801962425e-05, 35966.846294569696),
    (4.2131783524043186e-05, 23735.050046977598),
    (6.384428814149721e-05, 15663.10797988374),
    (9.674627531418014e-05, 10336.314763659437),
    (0.00014660421565705384, 6821.085560414213),
    (0.0002221563153581143, 4501.334007116249),
    (0.00033664399234565456, 2970.4956414437065),
    (0.0005101325946990764, 1960.2725719680197),
    (0.00077302809523246, 1293.6110359684717),
    (0.0011714061054483864, 853.6705946120902),
    (0.0017750871829168371, 563.3464431369612),
    (0.002689873727224198, 371.7558750210167),
    (0.004076093128294521, 245.3204919500347),
    (0.006176697077775135, 161.8812124701884),
    (0.009359841787167143, 106.81466849229885),
    (0.014183411810176771, 70.47034873658934),
    (0.02149279604841995, 46.47932881942244),
    (0.03256905236633745, 30.638189244680007),
    (0.04935342845349392, 20.172538818011265),
    (0.07478758892695585, 13.251101032750837),
    (0.11332917758242113, 8.66524412466619),
    (0.17173307330514478, 5.617829952402343),
    (0.2602352641744122, 3.5843757778040817),
    (0.39434682799621956, 2.2220493672561528),
    (0.5975724360187252, 1.310022714841919),
    (0.9055298304384403, 0.7094854776467215),
    (1.372192263881756, 0.3343084598280483),
    (2.07934796377196, 0.12608375050954113),
    (3.1509345069556334, 0.033539172496595736),
    (4.774760376860415, 0.005199866082641822),
    (7.235420668411001, 0.00035248369039871466),
    (10.964175815518526, 6.7704251584891755e-06),
    (16.614535190529818, 1.913095405106797e-08),
    (25.176792514276084, 2.9495932869556918e-12),
    (38.1515867905959, 5.527058809511876e-18),
    (57.81290741523289, 1.294237213117922e-26),
    (87.60663828080021, 1.2065917132771206e-39),
    (132.7544905454925, 2.416655946096244e-59),
    (201.1691705770619, 3.805625787331099e-89),
    (304.8411773068802, 2.922236326511148e-134),
    (461.94028197897626, 1.4060597138526413e-202),
    (700.0, 4.6731107967079664e-306),
)

K2 = (
    (1e-06, 1999999999999.5002),
    (1.51534738863033e-06, 870974792304.872),
    (2.2962777082287603e-06, 379298544415.19293),
    (3.479658428734491e-06, 165179735471.594),
    (5.272891313308328e-06, 71933692897.43169),
    (7.990262082153326e-06, 31326216615.267227),
    (1.2108022780662986e-05, 13642172504.815474),
    (1.8347860702154204e-05, 5940994181.705599),
    (2.7803382801962425e-05, 2587228086.4669724),
    (4.2131783524043186e-05, 1126705222.3463418),
    (6.384428814149721e-05, 490665923.2289851),
    (9.674627531418014e-05, 213678825.00558814),
    (0.00014660421565705384, 93054434.83239274),
    (0.0002221563153581143, 40524033.243362255),
    (0.00033664399234565456, 17647705.436500512),
    (0.0005101325946990764, 7685353.006355128),
    (0.00077302809523246, 3346874.08699599),
    (0.0011714061054483864, 1457521.1991415245),
    (0.0017750871829168371, 634731.8295974481),
    (0.002689873727224198, 276417.42947522196),
    (0.004076093128294521, 120376.02436763547),
    (0.006176697077775135, 52421.95917740121),
    (0.009359841787167143, 22828.82029536186),
    (0.014183411810176771, 9941.381353746976),
    (0.02149279604841995, 4329.064239261752),
    (0.03256905236633745, 1884.9711076143224),
    (0.04935342845349392, 820.5998354213851),
    (0.07478758892695585, 357.0805351536046),
    (0.11332917758242113, 155.22565476195325),
    (0.17173307330514478, 67.32414649336862),
    (0.2602352641744122, 29.05119321311567),
    (0.39434682799621956, 12.396501865093837),
    (0.5975724360187252, 5.165175252364839),
    (0.9055298304384403, 2.049793835442089),
    (1.372192263881756, 0.740024417647698),
    (2.07934796377196, 0.2246253884915516),
    (3.1509345069556334, 0.050482017607860724),
    (4.774760376860415, 0.00690471792876738),
    (7.235420668411001, 0.0004277858863842756),
    (10.964175815518526, 7.71607568518738e-06),
    (16.614535190529818, 2.088267951896304e-08),
    (25.176792514276084, 3.127005219763249e-12),
    (38.1515867905959, 5.7457531937070414e-18),
    (57.81290741523289, 1.327959938589338e-26),
    (87.60663828080021, 1.2273092562646703e-39),
    (132.7544905454925, 2.444012907545166e-59),
    (201.1691705770619, 3.8340371870794766e-89),
    (304.8411773068802, 2.936627222032937e-134),
    (461.94028197897626, 1.4106278985702912e-202),
    (700.0, 4.6831281768188284e-306),
)
