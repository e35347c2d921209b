pub const REFERENCE: &[(&str, &[f64], [f64; 2])] = &[
    ("Wfg3", &[1.2156700166903864, 3.083634833621534, 1.553093916570209, 1.1987217286576284, 7.1824336616094655], [1.6875618740316298, 2.0405518239604703]),
    ("Wfg3", &[1.730007564556681, 1.338626564059867, 1.3896099195334082, 5.423993188397002, 9.012791409663514], [2.231800230368894, 1.0417775366988509]),
    ("Wfg3", &[0.2485267648768672, 0.19974876663231056, 2.148758847216107, 2.39556876914922, 6.017324558212067], [0.844671271312606, 4.099090976682004]),
    ("Wfg3", &[0.36335335857829865, 0.12407202133451722, 1.9602308125790535, 1.8793030559929988, 3.0109877008915706], [0.9490729983500782, 3.8590129226151824]),
    ("Wfg3", &[0.8301464229911708, 0.840433323926959, 5.842559984130661, 4.974440913499661, 7.301768262950498], [1.4660968185993677, 2.975657549625855]),
    ("Wfg3", &[0.7488067658630433, 3.7420409908724364, 5.038590743785294, 1.9726654801277066, 7.108513717037974], [1.3019503389516167, 3.055530041362487]),
    ("Wfg3", &[1.8901505730612875, 2.2856887357969713, 2.2222185408559176, 3.0166117089074582, 8.339506925487473], [2.4205793959000617, 0.750127676716199]),
    ("Wfg3", &[1.068434926138538, 3.7405961581660216, 4.119029628703027, 6.545686952162052, 6.658100549260455], [1.7114515242518888, 2.506146745836275]),
    ("Wfg3", &[0.7522874031996327, 1.3159574812121795, 5.754400980465324, 5.5907263468987045, 4.062087562780306], [1.4647218578601127, 3.2078596482612145]),
    ("Wfg3", &[0.19065829613008423, 1.6603348527829853, 4.302141060292536, 2.649263727037301, 8.78952973036117], [0.8542104466373269, 4.282235558247074]),
    ("Wfg3", &[0.2329816604347439, 2.4132137352140255, 4.104013994132723, 0.49823855147573504, 6.605729234698794], [0.7563516802188692, 4.057406698914638]),
    ("Wfg3", &[1.3399797423277724, 2.854987823234197, 4.358639910474579, 5.618129981067605, 9.751298391926044], [1.9268249396029271, 1.90688571261961]),
    ("Wfg3", &[1.824595511121649, 1.3377376746230465, 3.2519725270893005, 7.60078741535163, 2.4832043676134674], [2.378067449969011, 0.9042809166040644]),
    ("Wfg3", &[0.718775248114587, 3.0875231780759997, 4.357385105955758, 3.407447618117197, 0.45579266184935463], [1.3622467748869527, 3.2059210305431916]),
    ("Wfg3", &[1.5333450011313763, 3.6631391622508636, 5.3453339371871635, 5.944456413557813, 8.70838365142732], [2.129735623154562, 1.5297006197604328]),
    ("Wfg3", &[1.5420849142240662, 1.050974935587385, 3.7461104273745693, 3.630602137164953, 6.219375652360165], [1.8941349888177297, 1.267880246145531]),
    ("Wfg3", &[1.2373090704540601, 0.3465284776234836, 5.152777296994595, 2.5149303286184015, 4.389017259129738], [1.5546950089132086, 1.8427677975510282]),
    ("Wfg3", &[0.7518336780139261, 0.3120564009941713, 1.331256158264502, 3.944775754140247, 9.824034095874048], [1.5291461780020592, 3.273645143960281]),
    ("Wfg3", &[1.3833259405450384, 0.7425644154619779, 1.7102914283835862, 0.4623143519125934, 8.833057420243005], [1.8678939155511247, 1.7179160939160094]),
    ("Wfg3", &[1.1101272240243731, 3.8533275113520267, 0.30820726032099643, 3.5628275155634235, 7.574273556784117], [1.7286712615734188, 2.3982895895002994]),
    ("Wfg3", &[1.5856692542977928, 2.694949230375962, 4.862131524292672, 3.0019184572369113, 8.898910463952133], [2.2656081739345546, 1.5086004110411761]),
    ("Wfg3", &[0.19564771568810313, 2.7826205577765206, 0.01596528415548648, 5.675635826180929, 1.671345697109864], [0.7926416031184398, 4.20569845605413]),
    ("Wfg3", &[0.6457093678056687, 3.6692963209087592, 2.443086941731625, 7.274864956423122, 5.971134592206356], [1.4343637224631902, 3.497235619046184]),
    ("Wfg3", &[0.14934130529600798, 2.3821078931792363, 2.5531066414284598, 7.255481676802041, 0.7941547499607771], [0.6184066020266119, 4.170382686138588]),
    ("Wfg3", &[1.9906595504468492, 1.6542982033748999, 2.8487503918950656, 5.108375234596352, 2.9865405931169353], [2.2678607327763034, 0.2958820814357557]),
    ("Wfg3", &[1.5703348851995758, 1.6603608341296305, 3.2552518470193204, 6.786396141170598, 0.8895936519877257], [1.96075655637165, 1.2497519007729228]),
    ("Wfg3", &[0.6078166346132399, 1.2148026381232953, 1.3309086787644078, 5.822631802293146, 3.831248087554716], [1.051030443465374, 3.2275805396256545]),
    ("Wfg3", &[1.3705857722898576, 3.101163864098919, 2.541825136223655, 5.3252137199131395, 4.623279179922109], [1.89285823442972, 1.7811009175601473]),
    ("Wfg3", &[0.05218346784034611, 0.030720386087742302, 5.037227599837284, 2.9074908963828037, 5.714870775790677], [0.5826188084017556, 4.426068404880717]),
    ("Wfg3", &[0.631923684474573, 1.3760178068823627, 4.312243054985735, 4.2156492742329155, 9.376422496629623], [1.319348691536337, 3.4235776381126177]),
    ("Wfg3", &[1.0532048496915334, 2.494777681275141, 4.865164684616415, 6.522524333984249, 7.832035835676222], [1.5843922762725318, 2.4247777271979314]),
    ("Wfg3", &[1.7115857766198446, 1.7568419332810006, 3.669059605636627, 0.2504528717585224, 5.199571272673598], [2.3015703039382376, 1.1668129740787037]),
    ("Wfg3", &[0.10814499596674843, 1.678987105338852, 1.705876091197181, 6.293035090032992, 7.244088627143972], [0.4239667192345563, 4.099531731334311]),
    ("Wfg3", &[1.3552189536275678, 1.1389409954495422, 1.1009412019404787, 2.0434448639604534, 8.003914459078931], [1.8634335576788277, 1.7977766967961242]),
    ("Wfg3", &[0.08426412650059967, 2.5157420088434734, 3.7129019178144143, 0.7936518196489057, 7.619196388029334], [0.48255850561790625, 4.2297661261161075]),
    ("Wfg3", &[1.877963875752528, 0.5954909409828315, 0.6326204788364223, 6.553674504921852, 3.2689531847168807], [2.4814930758004863, 0.8476014485429022]),
    ("Wfg3", &[0.9938181395913299, 2.8411554200772056, 4.678250413533503, 2.9869419466190203, 1.3870242932296806], [1.5278432500435186, 2.546388831269529]),
    ("Wfg3", &[0.7845662678487411, 2.2939983412531375, 4.124824903481995, 4.915227727190903, 8.900873959863759], [1.3345077007943766, 2.9808088972481532]),
    ("Wfg3", &[0.9651428736023671, 3.750927636551872, 2.402135114233868, 0.5608941722930103, 7.079662827396596], [1.712386685184239, 2.816958064377138]),
    ("Wfg3", &[0.4875550515683529, 3.061555188950693, 4.385227178030835, 7.027812735092069, 9.148495705751621], [1.008418465725667, 3.5457533110206083]),
    ("Wfg3", &[0.5794487935798651, 0.6669307490702887, 3.2063863647902373, 3.867605773338833, 5.818546475524595], [0.9381093668853442, 3.199762986145749]),
    ("Wfg3", &[1.574932708147143, 1.4354167975181769, 5.053918967552232, 5.101807993662234, 6.1043939970155865], [2.105918318998002, 1.3811201945565732]),
    ("Wfg3", &[0.020261732085745, 2.585164593657086, 0.7194168748444132, 6.934035714568653, 0.038372737856908756], [0.6350169462513824, 4.574231749994148]),
    ("Wfg3", &[1.673880711311834, 2.7680697140345316, 3.2926522233924453, 5.465683460741639, 9.368242396395761], [2.251967686000684, 1.2303255520651821]),
    ("Wfg3", &[1.844146249340478, 3.702701726606396, 5.990641790808605, 4.9241015421935845, 9.935399855029624], [2.6222879743372456, 1.0898492263158113]),
    ("Wfg3", &[0.5403656021590966, 1.1876751509548753, 0.9875759496347132, 5.562335856064198, 8.469846878406555], [1.0737112116307195, 3.4526144051534295]),
    ("Wfg3", &[0.0967496495850726, 3.4185782776072955, 0.8020329876869716, 5.884408032967544, 4.7435958176738335], [0.6466151481782908, 4.356366199423073]),
    ("Wfg3", &[1.4659179715620922, 2.3851422709547863, 3.872170824152856, 3.9631394604404235, 2.9315713554784195], [1.7147415157431243, 1.3169876010568475]),
    ("Wfg3", &[0.21092386244568795, 1.6222032739395713, 4.7121149320720965, 4.158473121609894, 8.443959171757655], [0.8683303390808713, 4.235558751743808]),
    ("Wfg3", &[0.6743852274301161, 3.1722733822105282, 5.829629517344809, 0.5975174180384677, 4.972039823009967], [1.3944914399866692, 3.371335757696321]),
    ("Wfg3", &[0.9508597904816265, 1.9765851665156418, 0.5668033618379069, 4.6963338532922245, 5.797618692091052], [1.4023725152830764, 2.5497931438381967]),
    ("Wfg3", &[1.8171394170359139, 1.4007998467244573, 4.325442349738164, 2.437698062790708, 6.596684555864644], [2.3190421793680174, 0.8676239282602759]),
    ("Wfg3", &[0.6933853731599287, 2.0947475107606404, 3.240147932702307, 1.2440395265686703, 6.300452065928326], [1.0010667095135863, 2.9209105900338006]),
    ("Wfg3", &[0.9268449015813935, 2.217042531151969, 5.164060447095082, 7.97962225616205, 4.44864812126805], [1.741014933554089, 2.9604802288099084]),
    ("Wfg3", &[0.7718860234344729, 2.856750644313582, 5.306111208143934, 1.0791143281597062, 2.960886037919944], [1.3711733897521416, 3.0555153194487232]),
    ("Wfg3", &[1.7157578767694694, 2.681732183870032, 0.9351262327113221, 4.183205487792573, 9.193814812785835], [2.3045986998696746, 1.1573250695612662]),
    ("Wfg3", &[1.6166879782342372, 3.8365850745611767, 4.157258686167676, 3.660189750043757, 4.794714356546339], [2.069368220909802, 1.2193042862070902]),
    ("Wfg3", &[1.4760821452807473, 0.08385886665702103, 5.843713139947168, 5.7975422586018555, 7.682077975688946], [2.024985133526922, 1.59673869768468]),
    ("Wfg3", &[0.5094927577589574, 0.03204246360184859, 2.3689943022437436, 7.034636443186891, 2.9880558491635103], [1.3693518259351147, 3.8408735526582425]),
    ("Wfg3", &[0.6837213302965459, 2.6474892655663087, 2.6600965764010347, 5.130715501827693, 1.771726773114688], [1.0718811163469268, 3.0207171254572893]),
    ("Wfg3", &[0.23933317534384702, 3.3880025276700776, 1.5427201852449948, 4.696259291511065, 1.9054428051596817], [0.7444291405979541, 4.026429614566413]),
    ("Wfg3", &[0.6519811987590995, 0.2574067084691367, 5.59561126741445, 7.679525944639105, 3.1788944928392118], [1.4180079271050297, 3.4620643308277312]),
    ("Wfg3", &[1.7625803967167737, 2.1689909433217216, 3.796881989017259, 2.001357026950365, 8.009068832741548], [2.230148254896224, 0.9424070647459027]),
    ("Wfg3", &[0.8929132576673795, 0.4952043245280193, 3.0551295003996426, 6.685056772579211, 5.593089701507287], [1.4951312548230897, 2.8163914818209514]),
    ("Wfg3", &[1.5039586344493663, 3.6514746177436663, 5.546227990498062, 2.639023550892033, 1.9308943496496134], [2.0160334583415955, 1.5041575549934967]),
    ("Wfg3", &[0.8008781212474965, 0.7608399925216345, 0.9278726468136171, 0.31451487085525187, 1.263795300683369], [1.3412162775433143, 2.938581913800825]),
    ("Wfg3", &[1.0586010212777663, 1.8279389227209104, 4.232667161044049, 3.3635479410489406, 0.7663349809047959], [1.677049046001065, 2.5012459821677657]),
    ("Wfg3", &[0.12438905902301234, 2.320470480567479, 4.14177703996737, 3.103821751991992, 8.253846895133647], [0.6830934819417074, 4.30992630487267]),
    ("Wfg3", &[1.075593792752483, 2.7713095851184937, 4.37411702427769, 6.064740504899456, 6.310908254402542], [1.5210855824335763, 2.294304204176127]),
    ("Wfg3", &[1.5312072788572364, 1.2653551400391203, 2.4887738628349476, 3.2332689772115684, 7.570214252500835], [1.8642275096352983, 1.270605673063589]),
    ("Wfg3", &[0.04439902094609027, 1.9767061174249752, 2.6373160430803626, 7.380401554974005, 3.137691384833603], [0.5555122547059612, 4.422315191867691]),
    ("Wfg3", &[1.7849369532991144, 2.275841743960464, 3.900845598670946, 7.129274062240839, 1.3116311534186742], [2.2717392044435822, 0.9169283445462392]),
    ("Wfg3", &[0.10061123505030167, 0.79183746779026, 1.6374163508661979, 0.49547248615274064, 3.9229841404612777], [0.6817761745229838, 4.379942469372079]),
    ("Wfg3", &[1.7651024168205003, 2.2938432193484077, 1.9478516320609, 4.922355478429492, 8.177674867538741], [2.216717005926116, 0.9214097554646152]),
    ("Wfg3", &[0.3874879587665556, 1.709382883705321, 0.7187579761836433, 5.4066694174208765, 0.48388447888255803], [1.0438494203210158, 3.8813855440213487]),
    ("Wfg3", &[0.8291046281383618, 1.8615626540398558, 0.17357662437363164, 2.390064622307669, 0.7241960101808165], [1.630332022590612, 3.1430181381755267]),
    ("Wfg3", &[0.5714589672212083, 2.7001947959716466, 3.7454160381486137, 6.930403950813846, 1.094682674006383], [1.0337948090321634, 3.3194179073685386]),
    ("Wfg3", &[1.7800554835692555, 2.943552351129467, 4.674126590459179, 7.153595026711614, 5.071751102715386], [2.3894396456699067, 1.04927319496214]),
    ("Wfg3", &[0.31377180431351714, 1.4917494269255536, 0.7268841116906184, 3.2672234067211177, 9.786791539342918], [1.10344702514247, 4.162131612201918]),
    ("Wfg3", &[0.22317743402596069, 1.4701972231415685, 3.947768384460854, 0.2996111155291228, 3.827366476922932], [0.8936749975081848, 4.224142695430302]),
    ("Wfg3", &[0.9552426834960697, 0.7621756542838085, 4.6489182124020045, 4.29772001379826, 9.494138631930229], [1.6191793404487949, 2.753451289960586]),
    ("Wfg3", &[1.6505656168972502, 1.3988585895351249, 2.869496659814631, 5.942892783876032, 2.082476703020496], [1.9837832724628763, 1.0320864217711256]),
    ("Wfg3", &[0.6034966576483127, 1.6931074414491456, 3.2820018255813617, 7.583262643825058, 2.0578021583578643], [1.1274994273517838, 3.3170094544068456]),
    ("Wfg3", &[0.7013981811402112, 1.4652262241619938, 4.824624839474148, 7.854309144137221, 7.251915010798397], [1.436316204644876, 3.3321216612242424]),
    ("Wfg3", &[0.49013999175883916, 1.440665337180652, 4.57250053319655, 4.250549357169322, 5.255775665425687], [0.8989764980919259, 3.4285565228154087]),
    ("Wfg3", &[1.1351520377790085, 3.491410109822161, 3.799358024676005, 4.952576475425801, 4.898498525044957], [1.6358437225740852, 2.2303876092370594]),
    ("Wfg3", &[0.5578659412367295, 1.2298601401433475, 2.676935359420496, 3.990804239206035, 2.3750702464310134], [0.7341147157074761, 3.0605168919972874]),
    ("Wfg3", &[0.930090180776262, 2.144471258612983, 5.104869283439448, 6.010322679685837, 3.0894831079043605], [1.5567437655351022, 2.766473223206316]),
    ("Wfg3", &[0.2527981698279429, 3.3599661631514937, 1.6990028412097755, 3.5725901731407363, 4.619331434362499], [0.6592294808107131, 3.9008349713268844]),
    ("Wfg3", &[0.8273183289487582, 3.2095681224991384, 4.173300794194862, 3.0026924889530893, 3.415059248502126], [1.102154465326576, 2.6201994784803015]),
    ("Wfg3", &[1.5082275012063706, 3.288384642039132, 1.1320049776569112, 4.846853253974434, 4.273739900175201], [1.971526720395223, 1.4468442167761109]),
    ("Wfg3", &[0.795209290422177, 2.1450866057780704, 4.30583743115403, 5.266818969930531, 1.1809602879669934], [1.2824736760326898, 2.8968458047661585]),
    ("Wfg3", &[1.2716130785760218, 3.023337482593333, 1.1936232513772407, 2.2120304780284563, 7.958099805286061], [1.8197912695221508, 2.0049520337940856]),
    ("Wfg3", &[0.587572549493673, 3.737672443835236, 1.6487990825676335, 1.3075359719992896, 0.47033710925926453], [1.3452871857849762, 3.582569537303957]),
    ("Wfg3", &[1.5662514344893543, 3.5869451037865794, 2.8834403129079105, 6.149780565452773, 2.3322294944175415], [2.2198236111759226, 1.5210693077078596]),
    ("Wfg3", &[0.2477019673462708, 2.4673434297131527, 0.03410025717356935, 1.4867746712663523, 2.4112194022241296], [0.85382123572875, 4.110715333689938]),
    ("Wfg3", &[1.8931042230501274, 3.5170471228050113, 1.8654630698797892, 0.1799391494067084, 3.116307339903094], [2.731211557652649, 1.0518988885022669]),
    ("Wfg3", &[0.1511914740462108, 2.0746212106091475, 4.924709159772187, 4.0158001690457805, 9.694065181464222], [0.9075873229032237, 4.454012900764591]),
    ("Wfg3", &[1.3060323260499227, 1.8735306246032035, 2.48702422151145, 5.060551149742718, 2.297811831564629], [1.5406700428940783, 1.6225730647443102]),
    ("Wfg3", &[1.5802576617349664, 0.6419940824743939, 4.181321081549903, 4.307417937331824, 4.228577889376649], [1.888291263578635, 1.1475182783737359]),
    ("Wfg4", &[0.1453082271905941, 3.3367644757363055, 5.171229795594826, 1.4488226858430782, 8.886253306036917], [2.041487152644266, 3.024953652613375]),
    ("Wfg4", &[0.9772425192548129, 1.0412313303238037, 1.6981497905083405, 5.401084019755607, 8.944756661717012], [0.8518028965138326, 4.253954308846774]),
    ("Wfg4", &[0.24093415003878893, 3.175777264734798, 4.826676855614105, 7.97454148868174, 9.194433949758889], [1.903974497217248, 3.99631184220329]),
    ("Wfg4", &[1.8060327462572485, 2.3323074750192583, 0.835849555605868, 7.904456023304499, 6.76707784199373], [1.600252117625296, 3.9026863111972965]),
    ("Wfg4", &[0.004020144453461327, 0.5281897035927052, 1.8305668152725523, 2.7133115239509946, 1.519234485148967], [1.8077845009168583, 2.303958480390617]),
    ("Wfg4", &[1.1828792707273603, 3.3400315972693937, 3.2895102273755312, 7.460520865033235, 9.979523222554189], [1.8059170297822336, 3.9250382955259604]),
    ("Wfg4", &[1.152590952966261, 0.3365105245051767, 5.830911671436651, 0.7990089227811366, 9.429597626419948], [1.8140524233891933, 3.970036762639608]),
    ("Wfg4", &[1.6537386741297142, 0.4396712387937245, 4.016537849609918, 0.404192186123459, 7.6480582077184955], [1.8502403800324692, 3.286849791869927]),
    ("Wfg4", &[0.8161400159011689, 0.6994666493493145, 2.9848792331702656, 0.023214038914265878, 8.81923447045799], [1.1248945578100633, 4.308189867809498]),
    ("Wfg4", &[1.847275838526954, 2.401826153954221, 3.692896684861946, 1.443280463585559, 4.294743356597072], [1.4823913817040155, 3.3342736853079904]),
    ("Wfg4", &[1.9486190774068202, 3.5125393873362856, 5.0798819292925, 1.7514565971734513, 4.577088879458687], [2.142619217635021, 1.853296036262172]),
    ("Wfg4", &[0.711746072953606, 2.4309228664017914, 5.929908476283776, 7.57553020582373, 7.498939210502149], [1.0113467901651751, 4.562040434743809]),
    ("Wfg4", &[0.7403042182628383, 0.023235380845452624, 3.3080214935065655, 7.431694065472342, 6.766367191680765], [1.6160282434031914, 3.640320271430909]),
    ("Wfg4", &[0.2699219533959687, 0.07316081502755534, 3.3468697159456644, 6.0452707889186605, 7.129456273569509], [1.8381843938627818, 2.688175813746359]),
    ("Wfg4", &[1.4564506303933686, 1.530034401057304, 0.5964185127648014, 5.894585463606218, 6.16696647915783], [1.1829384664103992, 4.020494542303438]),
    ("Wfg4", &[1.279379019007371, 2.2134989588980014, 1.5174242753994727, 0.4596461197663402, 0.10828732144793851], [1.4970026039658282, 4.254932199503183]),
    ("Wfg4", &[1.5278067669754243, 3.4062246971886934, 3.4143438111760167, 7.599993608393792, 3.7299846283220193], [1.8927372379471363, 2.779395182403931]),
    ("Wfg4", &[1.7237278448605928, 2.1834519154881944, 1.9394038721044966, 5.9784392064109655, 3.4343439719789934], [1.2164927436464275, 3.741184400113012]),
    ("Wfg4", &[1.4275966360124988, 2.4675582912293654, 0.6012164739053762, 3.2840008187935092, 4.5098781260639145], [1.0913930882750003, 3.816551682618647]),
    ("Wfg4", &[1.906289071804143, 2.987055674245647, 4.468167280889589, 0.6610246406785096, 3.6398966102633445], [2.0904696893065737, 2.535310157194093]),
    ("Wfg4", &[0.6182080091422852, 1.0694405969463898, 0.3854699152747345, 1.9148738117759372, 0.188566617253626], [0.9529860925143858, 4.428750995601186]),
    ("Wfg4", &[1.2200736404619323, 2.8941597869323012, 0.9848455705826868, 5.875036783689182, 8.621604550390337], [1.3208726343893626, 3.8843984031399446]),
    ("Wfg4", &[0.7982817237214073, 0.6633069316047902, 0.590217335086402, 5.057927823412616, 8.944470479044991], [1.0197529167645376, 4.323227497562914]),
    ("Wfg4", &[0.5834970843165033, 3.331768733261575, 3.460238080625764, 1.0717497284821649, 2.44727505700442], [1.176386850312629, 3.7756972418822765]),
    ("Wfg4", &[1.2139878394074308, 1.9058823936617917, 3.491270037321087, 3.583915927575382, 6.451512754738129], [0.4415695504936915, 4.130919138470224]),
    ("Wfg4", &[0.6933016590214887, 1.3718378231639945, 5.138280202035775, 4.188073981239818, 6.323223026208949], [0.6971643387805708, 4.226333791460187]),
    ("Wfg4", &[0.6671784544564381, 3.4907599032567935, 0.3022917574383108, 6.263443159343966, 4.402502334688235], [1.6589139716401315, 3.5142185975823304]),
    ("Wfg4", &[0.5436561889448364, 1.484113929888041, 3.2212164187811174, 7.202966114042203, 0.2915042777876875], [0.6442197129888296, 4.485159247534053]),
    ("Wfg4", &[0.31094666164835205, 0.7753820504457649, 2.1868856485257826, 7.6570377209275025, 3.2017950083534084], [1.2634507458362751, 3.9884881705524347]),
    ("Wfg4", &[0.0804950207716677, 2.9185356784697976, 4.746481485775197, 5.235543961340972, 6.950381052775496], [1.7562849559960783, 3.2105369880062624]),
    ("Wfg4", &[1.5193618681967491, 1.4301999774221659, 5.906262165241112, 5.758855172194971, 4.747391485662819], [1.260915555350594, 4.097704467631043]),
    ("Wfg4", &[1.160551518221855, 0.9723990310894046, 4.109841187592145, 5.3895149997103395, 0.10347593865234206], [1.0542797644013255, 4.3516841405916615]),
    ("Wfg4", &[1.4331658349424374, 1.0485235330369558, 1.4690819090814942, 4.577445938040868, 5.5371321769727295], [0.977040595488923, 3.893929252256138]),
    ("Wfg4", &[0.15341937208670386, 3.9728752204745623, 3.1113751477223497, 6.842375131556916, 1.6177460302044588], [2.1545012775185794, 2.107951395007049]),
    ("Wfg4", &[0.9723158438880786, 3.860280093823018, 4.954733499379728, 4.92609149932011, 5.52025186365404], [1.7417812523921692, 3.2893741644816106]),
    ("Wfg4", &[0.8250101006202768, 3.0790634344007066, 2.8637440727159387, 2.711245543142062, 7.3156621305493985], [0.8389263563748527, 3.8393863369495995]),
    ("Wfg4", &[0.5655714385412243, 0.6905727026517026, 5.703440282391821, 6.683992218934778, 3.7880402415858394], [1.152115345493588, 4.2395272185945005]),
    ("Wfg4", &[1.4863699307627063, 2.736560580552195, 3.5024697703710483, 6.329097449065897, 1.1113256689417061], [1.531319232709467, 3.570034562430409]),
    ("Wfg4", &[1.4333760151534736, 1.2961991263478039, 5.9819382037198245, 2.6182325491584084, 6.271517986327996], [1.0198579408443142, 4.157051064427208]),
    ("Wfg4", &[1.602909894288603, 2.5157093961556116, 3.2622190725233478, 3.351822397562727, 3.152432894956947], [0.9930629884107245, 3.5994259370802877]),
    ("Wfg4", &[0.40374290914511723, 0.18249886344279487, 4.868694052434373, 7.798062736397386, 4.195939986361581], [1.8804758131491202, 3.431702226551042]),
    ("Wfg4", &[0.5651681573994674, 1.300836265042387, 5.288871082198397, 2.8318036058149234, 3.8691165435543304], [0.3909955222145238, 4.22462233324157]),
    ("Wfg4", &[0.9505368250587414, 1.427684388294245, 2.1287453318440557, 1.484813180280102, 3.8352392139733196], [0.4533535696491713, 4.140783530402075]),
    ("Wfg4", &[0.6014324911303657, 3.746432188000127, 5.395752423631925, 2.850996622536573, 7.556176257870555], [1.744309550880007, 3.2670476215538606]),
    ("Wfg4", &[0.08809328109022263, 2.7881259755702352, 4.212136696246942, 1.5485154872643978, 5.119920111135762], [1.8295573316979468, 2.8981281234673664]),
    ("Wfg4", &[1.6980745125117083, 0.7394268593807447, 5.620993881395543, 4.976455832965625, 4.517040538067951], [1.7775340287154937, 3.2580729278797858]),
    ("Wfg4", &[1.796088739657032, 1.2021772073685342, 1.767772678887692, 6.5859747503974155, 1.8625472636992302], [1.487293711122297, 3.472747804237806]),
    ("Wfg4", &[1.6133341905671017, 0.16137769249840783, 1.8037855594940269, 0.3781901270547756, 9.615537935840146], [2.219477341006553, 2.8749915722085904]),
    ("Wfg4", &[1.484889687404691, 1.1025198005873698, 2.3761403950360265, 0.6038254245567831, 4.918349127761128], [1.239154777018582, 3.715609953759772]),
    ("Wfg4", &[0.18703743234525616, 0.4456564564540275, 1.597029347526926, 5.036016103815629, 4.360717415658889], [1.563558027061707, 2.879638958498021]),
    ("Wfg4", &[1.0161240990078788, 0.22610002806854057, 4.958324338208037, 7.468735779228213, 6.219730400852902], [1.8964021875597408, 3.481128304706073]),
    ("Wfg4", &[1.0525854853809957, 1.4130121020842825, 5.40108828404133, 3.7517624697623706, 6.561907351176962], [0.6848940843301712, 4.339623875576639]),
    ("Wfg4", &[1.6066345830795294, 2.127427475841555, 3.4481691380322546, 5.282654934383946, 6.33431716939811], [1.3781395055181995, 3.6544796471930514]),
    ("Wfg4", &[1.521368099176029, 1.576413823338854, 4.431758410994458, 3.4883367899936095, 6.983114199159353], [0.9282585842505643, 4.018412638754604]),
    ("Wfg4", &[0.5985472048910576, 2.4118197794426712, 5.336596812727841, 7.490267171341831, 9.065606229845585], [1.2293100580706904, 4.590815030861349]),
    ("Wfg4", &[1.9377147930901701, 0.19642010538372912, 3.1547076490608053, 2.7796474432088214, 3.59090869776598], [1.934314740152809, 1.8210998622092534]),
    ("Wfg4", &[1.117512916605446, 1.082902105550012, 1.9513326281710899, 3.8741698038477166, 2.9393290932261706], [0.39243350438959934, 4.026181436203744]),
    ("Wfg4", &[0.20184219574292572, 2.915585772204604, 2.0544622513658437, 3.3004829769920434, 4.387224365794884], [1.3405498467989119, 3.1483946214913594]),
    ("Wfg4", &[1.1874073208082492, 2.563151719001093, 0.059418742214096154, 2.0587037720462567, 8.70544629919966], [1.4389220074208087, 4.155755923946636]),
    ("Wfg4", &[1.8062805686974668, 1.0004940443211914, 0.7009827037245129, 3.2055713208918686, 0.019465772975050255], [1.6807648339685284, 3.7972733982963383]),
    ("Wfg4", &[0.18023555670966052, 1.130481458109493, 1.5181131833365038, 5.964010018281655, 3.749848749429269], [1.2240422575049308, 3.7378899272722554]),
    ("Wfg4", &[0.5139563929216864, 1.2657583473388936, 0.6365290058889879, 5.058214751689667, 2.119774960283812], [0.4334176917379603, 4.275745792884243]),
    ("Wfg4", &[1.2468846424368496, 2.3481213580640574, 4.1522336733137575, 5.25089416580225, 8.60208205793327], [0.8647334957999862, 4.231277710355033]),
    ("Wfg4", &[1.0945427490873867, 3.8940023019185803, 4.449407438180292, 2.8074727179495573, 1.2035497986180521], [1.7018106370387858, 3.05899830346831]),
    ("Wfg4", &[1.3883097890417508, 1.5762403851462161, 5.4367900587556335, 4.717767225974693, 3.8623498933958986], [0.7448866080838925, 4.2152382802088475]),
    ("Wfg4", &[0.09149460261006048, 0.9545432476169977, 4.081955716966706, 7.542242254101162, 8.521085866046938], [1.9943623985676324, 3.450991754753423]),
    ("Wfg4", &[1.9455436139064906, 3.512159527195341, 3.2788678472635855, 3.49966354202276, 0.14331512511906563], [2.160294544844906, 2.008105225006753]),
    ("Wfg4", &[1.0844168508959486, 0.5065974682858103, 3.3839476635640087, 7.470831736804445, 3.007197765212971], [1.2220005614666727, 3.941785440699747]),
    ("Wfg4", &[0.4866040074571689, 3.773886150174981, 2.6334185540858126, 1.6139794944206498, 0.44550945609732606], [1.6505006856881015, 3.342574528865099]),
    ("Wfg4", &[0.8635162410841124, 0.8235620470464475, 4.2372482725622085, 6.208881933039022, 5.647982788277817], [0.8223028652833843, 4.115154914694906]),
    ("Wfg4", &[0.07553321958061043, 1.5696045330352435, 4.1003812740517445, 4.125830967720062, 1.4180274962733797], [1.3515361091349487, 3.6301225069954577]),
    ("Wfg4", &[0.07331431004926192, 1.6282306755005176, 3.184373323685982, 6.064244919110208, 8.83273424552756], [1.6908002340041792, 3.413228087828654]),
    ("Wfg4", &[0.15044490214421957, 0.1673376355900018, 5.709706490836764, 1.2161393075200913, 9.4370655063931], [2.236720153752638, 2.9799103841447985]),
    ("Wfg4", &[1.0397503856599175, 2.831303965439993, 5.844380234687967, 5.2381208672914665, 1.4545255272374247], [1.0751260837473828, 4.326436173541604]),
    ("Wfg4", &[1.4534500216813606, 1.6047478358353482, 3.0652727311874104, 6.063492202694123, 7.830952773542018], [1.20095177401133, 3.978091292985814]),
    ("Wfg4", &[1.8819690632866115, 2.550876942646632, 0.03802569373712239, 7.58665268713118, 8.11681548425796], [2.2231848300530337, 3.258589841336163]),
    ("Wfg4", &[1.426767929933925, 2.78669958699688, 3.674465046693825, 7.972181416871175, 9.29048765483947], [1.5353167618655124, 4.208286289083528]),
    ("Wfg4", &[0.0032216061277698937, 0.13282191510080876, 1.220051111011199, 4.34692510680574, 8.08130859573385], [2.2660639674255934, 0.9384431191852047]),
    ("Wfg4", &[0.18959870850728677, 2.34629223079926, 5.049535178732393, 2.0749454874731086, 2.61718436027939], [1.2138908021940629, 3.735031525832991]),
    ("Wfg4", &[0.905204135859002, 2.7781023649696706, 2.996796953048119, 7.443904983801641, 6.811641241354577], [0.9270181261117141, 4.241369686299815]),
    ("Wfg4", &[0.41743902653967946, 1.23807036851746, 1.3307000781680614, 3.9747853227597822, 8.360195309225869], [0.9046322779787533, 4.023274716353222]),
    ("Wfg4", &[1.3330274213847924, 0.8521578609685343, 0.11488482840224057, 1.392100526796801, 9.922974127050864], [1.2222684264019554, 4.492022004854546]),
    ("Wfg4", &[0.6344403865649118, 1.2564912202478569, 5.762202366071937, 6.693542981161217, 1.6712618276013191], [0.6515104279345402, 4.53096442193519]),
    ("Wfg4", &[1.365159096974707, 1.81795352774517, 5.770125551885651, 3.493555190058336, 2.856994452482613], [0.9722498825240464, 4.1493193502987715]),
    ("Wfg4", &[1.6617399174448668, 2.2112677747111884, 3.6756722887308912, 0.6383208483438203, 0.5656131566097844], [1.8080832892996868, 3.6682636721777295]),
    ("Wfg4", &[0.4109592057699696, 3.14891592141417, 4.502383600730021, 1.5037651080722707, 3.632001187960766], [1.465145350861547, 3.4064273705202446]),
    ("Wfg4", &[1.6004445967369396, 0.24216883043219317, 1.0448455633451257, 5.2215992182313045, 0.7821384182392277], [1.8808269808592912, 3.0788751593046375]),
    ("Wfg4", &[0.723837940929323, 3.760012976456185, 2.8565271107249357, 0.20190616513182658, 6.137149483541324], [1.756976523451036, 3.289346363781526]),
    ("Wfg4", &[1.5505667438584827, 2.261979589097118, 4.693103741766779, 5.484514042058682, 8.36088814849833], [1.154779486136303, 4.1604853919390585]),
    ("Wfg4", &[0.49836378672437265, 2.8927224810695287, 5.887896867596723, 1.3667092591297587, 3.499377395337342], [1.304402038660454, 4.03012592821353]),
    ("Wfg4", &[1.4854626658049255, 2.1739834206383892, 0.5326024463464114, 6.479275419962234, 0.5916469586775552], [1.4386068729799724, 4.2433162714719215]),
    ("Wfg4", &[0.256516102344146, 2.918644401424974, 3.2074932841429415, 0.4395817589825439, 4.530627316092729], [1.4792585951514332, 3.572638102426769]),
    ("Wfg4", &[1.0755872903817456, 1.6096811196423593, 0.5147362463629057, 3.504646037637367, 0.28281110929253894], [0.860994285768558, 4.304413750663053]),
    ("Wfg4", &[1.8072672858427428, 1.0239904448470387, 0.5500220408353349, 7.707842826384121, 6.064313453074341], [1.5897418749821515, 3.898697131100469]),
    ("Wfg4", &[1.0509695206434566, 2.684778300577261, 5.077282842446728, 0.46159294458304334, 1.7578257557260313], [1.0687035324707006, 4.38132313327956]),
    ("Wfg4", &[1.0270815564389344, 1.6036192813085686, 1.1267516540945242, 1.8052191488231406, 4.749327559150725], [0.6451787736362773, 4.006777092277368]),
    ("Wfg4", &[0.6114486471188627, 3.0956404050250517, 3.5069260475322324, 6.144410539872601, 2.7510305385592737], [0.9113943110242327, 4.0543808091760685]),
    ("Wfg4", &[1.8694291717520517, 3.5602391194483927, 2.451526977866165, 6.8894039808296785, 8.929580443282969], [2.321131022051077, 1.870068129263974]),
    ("Wfg4", &[0.5427663595031944, 2.149426633757736, 3.619052245317364, 5.58502835180301, 7.5583513041898795], [0.6046315844319794, 4.227792930902477]),
    ("Wfg4", &[0.7996838472503454, 2.8355313259166706, 5.323888845079615, 6.349122329917462, 3.1191281207763186], [1.0550723276817677, 4.178800305235933]),
    ("Dtlz7", &[0.5059692009876344, 0.3404488501924534], [0.5059692009876344, 10.127278816623948]),
    ("Dtlz7", &[0.0582807761604377, 0.35724319944488336], [0.0582807761604377, 10.341669810370348]),
    ("Dtlz7", &[0.9624628422653054, 0.1649309440655815], [0.9624628422653054, 5.672853140168929]),
    ("Dtlz7", &[0.7640368374736967, 0.2901432499228226], [0.7640368374736967, 7.851742523644211]),
    ("Dtlz7", &[0.4899214978873839, 0.5571996502186489], [0.4899214978873839, 14.027385169510646]),
    ("Dtlz7", &[0.6306036032771101, 0.8591245755761174], [0.6306036032771101, 19.043869361187014]),
    ("Dtlz7", &[0.11454368739708187, 0.42729439931315294], [0.11454368739708187, 11.475757169328915]),
    ("Dtlz7", &[0.7922842454927022, 0.7986346698217981], [0.7922842454927022, 16.849412267955405]),
    ("Dtlz7", &[0.7656729699827123, 0.8446543813047217], [0.7656729699827123, 17.82290544956721]),
    ("Dtlz7", &[0.647509691975139, 0.3530120098016686], [0.647509691975139, 9.822980375759895]),
    ("Dtlz7", &[0.6477474452470579, 0.19298492959689695], [0.6477474452470579, 6.940869720676386]),
    ("Dtlz7", &[0.914935628833917, 0.7527305358905692], [0.914935628833917, 15.976788517290984]),
    ("Dtlz7", &[0.29921019149629624, 0.44578075487190183], [0.29921019149629624, 11.630266700985096]),
    ("Dtlz7", &[0.8900505557516495, 0.15192832448724436], [0.8900505557516495, 5.07877133103153]),
    ("Dtlz7", &[0.04588998884986928, 0.33902313577351084], [0.04588998884986928, 10.037291914277573]),
    ("Dtlz7", &[0.16714095467716028, 0.7251238927916944], [0.16714095467716028, 16.71794983075097]),
    ("Dtlz7", &[0.23155916616731353, 0.11176502295737933], [0.23155916616731353, 5.590626376886842]),
    ("Dtlz7", &[0.12232078469980157, 0.9666132198758717], [0.12232078469980157, 21.164925407628324]),
    ("Dtlz7", &[0.7989092879348675, 0.2763652521687464], [0.7989092879348675, 7.41843528881827]),
    ("Dtlz7", &[0.8480768272494298, 0.7928389176872981], [0.8480768272494298, 16.58312114150608]),
    ("Dtlz7", &[0.42387039371640356, 0.4327404782514448], [0.42387039371640356, 11.684822850865604]),
    ("Dtlz7", &[0.9248378614340622, 0.4107825579215164], [0.9248378614340622, 9.867540084945619]),
    ("Dtlz7", &[0.2981745859470504, 0.2840952602932202], [0.2981745859470504, 8.718534201200157]),
    ("Dtlz7", &[0.30184805917110347, 0.491250222173633], [0.30184805917110347, 12.452393790226894]),
    ("Dtlz7", &[0.1723050584593696, 0.29758480648664487], [0.1723050584593696, 9.012159630649442]),
    ("Dtlz7", &[0.23428745312289134, 0.001971104984194838], [0.23428745312289134, 3.6128958974282925]),
    ("Dtlz7", &[0.4297199594958119, 0.17117281516826377], [0.4297199594958119, 6.990239771865453]),
    ("Dtlz7", &[0.34770935499572253, 0.9992691129179904], [0.34770935499572253, 21.686102089303233]),
    ("Dtlz7", &[0.4159785578768175, 0.2972927810990761], [0.4159785578768175, 9.227519002558962]),
    ("Dtlz7", &[0.10069020916972804, 0.789672385630563], [0.10069020916972804, 18.031569370647343]),
    ("Dtlz7", &[0.1269727782975637, 0.7154528315069072], [0.1269727782975637, 16.63298752503943]),
    ("Dtlz7", &[0.3193031777647096, 0.12787564886651748], [0.3193031777647096, 5.94035962540676]),
    ("Dtlz7", &[0.4202646907949411, 0.5148565757747458], [0.4202646907949411, 13.154230182791133]),
    ("Dtlz7", &[0.18941301052728376, 0.15995544961377883], [0.18941301052728376, 6.504707992753125]),
    ("Dtlz7", &[0.2995492275162337, 0.29660494362189993], [0.2995492275162337, 8.945564466802544]),
    ("Dtlz7", &[0.4553233065742808, 0.971485774619738], [0.4553233065742808, 21.446972802814862]),
    ("Dtlz7", &[0.675837553025015, 0.39784386704219254], [0.675837553025015, 10.427009709876682]),
    ("Dtlz7", &[0.5201031694153644, 0.01316407363131522], [0.5201031694153644, 4.2276458640308965]),
    ("Dtlz7", &[0.13122764724479952, 0.7124234959650002], [0.13122764724479952, 16.56841966586038]),
    ("Dtlz7", &[0.23181345662593966, 0.6703887610621706], [0.23181345662593966, 15.64571071712503]),
    ("Dtlz7", &[0.8663492516899979, 0.32656592672797113], [0.8663492516899979, 8.187093124424322]),
    ("Dtlz7", &[0.05388096457998526, 0.8251848336304016], [0.05388096457998526, 18.77324533757342]),
    ("Dtlz7", &[0.36156791348228356, 0.010179237476771852], [0.36156791348228356, 3.916741754134493]),
    ("Dtlz7", &[0.5101026503006835, 0.1374332826781257], [0.5101026503006835, 6.471488554291497]),
    ("Dtlz7", &[0.8961203745207619, 0.42575868471356226], [0.8961203745207619, 10.02378866929977]),
    ("Dtlz7", &[0.6480853227042469, 0.008024517576914358], [0.6480853227042469, 3.6092727208907465]),
    ("Dtlz7", &[0.603569750836338, 0.71121148896482], [0.603569750836338, 16.536380423092265]),
    ("Dtlz7", &[0.5873338385696638, 0.3185498500356324], [0.5873338385696638, 9.545921039322563]),
    ("Dtlz7", &[0.4394359620956353, 0.9620766734197814], [0.4394359620956353, 21.24771527950889]),
    ("Dtlz7", &[0.038277288363615325, 0.0299403655650623], [0.038277288363615325, 4.48713814844454]),
    ("Dtlz7", &[0.013208103290094475, 0.15168259873236323], [0.013208103290094475, 6.715438726889498]),
    ("Dtlz7", &[0.805867481047759, 0.5705992097862183], [0.805867481047759, 12.685900275851443]),
    ("Dtlz7", &[0.03406325535996202, 0.4275604297425467], [0.03406325535996202, 11.651275741972025]),
    ("Dtlz7", &[0.38231248994971667, 0.9841545738213746], [0.38231248994971667, 21.50275069323754]),
    ("Dtlz7", &[0.9558114905055825, 0.6197331976323859], [0.9558114905055825, 13.812729855854176]),
    ("Dtlz7", &[0.2602813725803589, 0.4640746940559414], [0.2602813725803589, 11.927685946207518]),
    ("Dtlz7", &[0.21524531805126768, 0.09328663825952521], [0.21524531805126768, 5.270837396849256]),
    ("Dtlz7", &[0.19227278330366482, 0.8372909069052514], [0.19227278330366482, 18.69226272642111]),
    ("Dtlz7", &[0.5427854873116709, 0.9901543237344438], [0.5427854873116709, 21.779242624813996]),
    ("Dtlz7", &[0.5424309802034907, 0.4975515285712818], [0.5424309802034907, 12.913129130519591]),
    ("Dtlz7", &[0.9938942489699798, 0.47957489880013415], [0.9938942489699798, 11.581291500033213]),
    ("Dtlz7", &[0.6905145221070293, 0.08600638079570089], [0.6905145221070293, 4.703703200180399]),
    ("Dtlz7", &[0.5890473317965244, 0.1442409902320292], [0.5890473317965244, 6.400785967872918]),
    ("Dtlz7", &[0.7177872983960832, 0.06110393860035168], [0.7177872983960832, 4.049478510762923]),
    ("Dtlz7", &[0.7374643712003729, 0.8373872527745543], [0.7374643712003729, 17.879140946992347]),
    ("Dtlz7", &[0.541829985770883, 0.7192504973114592], [0.541829985770883, 16.90494484517062]),
    ("Dtlz7", &[0.2834743444540544, 0.7641734397764975], [0.2834743444540544, 17.343288700881185]),
    ("Dtlz7", &[0.8612990448161967, 0.5292467656842397], [0.8612990448161967, 11.833587895188899]),
    ("Dtlz7", &[0.36807781340301504, 0.8947649982282954], [0.36807781340301504, 19.856080003538526]),
    ("Dtlz7", &[0.5081130629484211, 0.815725678626138], [0.5081130629484211, 18.681577542646306]),
    ("Dtlz7", &[0.6417464112037857, 0.40346949273677124], [0.6417464112037857, 10.770048146530556]),
    ("Dtlz7", &[0.2103900196107772, 0.5208177963331855], [0.2103900196107772, 12.971552343476464]),
    ("Dtlz7", &[0.6595424684468618, 0.3344003971886965], [0.6595424684468618, 9.403915724358573]),
    ("Dtlz7", &[0.9647745255417977, 0.291295203316146], [0.9647745255417977, 7.964092912147557]),
    ("Dtlz7", &[0.6316956075219917, 0.6382321379793435], [0.6316956075219917, 15.060937066362177]),
    ("Dtlz7", &[0.973945367196346, 0.5405542881638091], [0.973945367196346, 12.519266948823928]),
    ("Dtlz7", &[0.9406600453587217, 0.9259958817043995], [0.9406600453587217, 19.2281853918144]),
    ("Dtlz7", &[0.44139709386447223, 0.2510467397812701], [0.44139709386447223, 8.453209947176799]),
    ("Dtlz7", &[0.27353109789624364, 0.07992245398524045], [0.27353109789624364, 5.018938501286151]),
    ("Dtlz7", &[0.4764786850403, 0.5284376961914667], [0.4764786850403, 13.500218502127913]),
    ("Dtlz7", &[0.5886016754540319, 0.7697164252430695], [0.5886016754540319, 17.66132798266603]),
    ("Dtlz7", &[0.6501819899327789, 0.21766115256436058], [0.6501819899327789, 7.368328007196958]),
    ("Dtlz7", &[0.8509995850185944, 0.5437061625914754], [0.8509995850185944, 12.096480413317801]),
    ("Dtlz7", &[0.979793328564526, 0.827672947144956], [0.979793328564526, 17.732850438711477]),
    ("Dtlz7", &[0.08960753051141535, 0.15188472398165953], [0.08960753051141535, 6.577321553516322]),
    ("Dtlz7", &[0.031255657200634834, 0.28633261751830263], [0.031255657200634834, 9.11365682505237]),
    ("Dtlz7", &[0.3045835330924661, 0.7987302758715559], [0.3045835330924661, 17.991037517958894]),
    ("Dtlz7", &[0.24682112854986604, 0.08502898877369103], [0.24682112854986604, 5.104021968371716]),
    ("Dtlz7", &[0.08033953765001578, 0.3533150898937728], [0.08033953765001578, 10.22414875243035]),
    ("Dtlz7", &[0.23348454246409878, 0.711266004032263], [0.23348454246409878, 16.380606339774037]),
    ("Dtlz7", &[0.8458123212420242, 0.7420875278098582], [0.8458123212420242, 15.671793971580595]),
    ("Dtlz7", &[0.6775120809045109, 0.6807334880963801], [0.6775120809045109, 15.506558915460046]),
    ("Dtlz7", &[0.9237075348060801, 0.043869656290192016], [0.9237075348060801, 3.2575349563797977]),
    ("Dtlz7", &[0.34991816240071716, 0.6830641776624813], [0.34991816240071716, 15.999709710333825]),
    ("Dtlz7", &[0.8366892462764075, 0.4460971674152746], [0.8366892462764075, 10.356788988305501]),
    ("Dtlz7", &[0.6115815942062972, 0.5682092166761565], [0.6115815942062972, 13.919623552473734]),
    ("Dtlz7", &[0.6068668846875791, 0.29066051299413176], [0.6068668846875791, 8.949230414594465]),
    ("Dtlz7", &[0.5975419849705386, 0.06609050364285851], [0.5975419849705386, 4.954417266455693]),
    ("Dtlz7", &[0.5362933026869143, 0.96534030306872], [0.5362933026869143, 21.34505633075448]),
    ("Dtlz7", &[0.21868430425177465, 0.09116231654732387], [0.21868430425177465, 5.229311264277105]),
];
