window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#quick-start","introduction.html#where-to-go-next","spin-operators.html#spin-operators-and-ground-states","spin-operators.html#the-squeezing-hamiltonian-is-tridiagonal","spin-operators.html#moments","boundary-curves.html#boundary-curves","boundary-curves.html#sweeping-the-curve","boundary-curves.html#evaluation-never-overestimates","boundary-curves.html#analytic-bounds","boundary-curves.html#convexity-diagnostics","boundary-curves.html#half-integer-j","boundary-curves.html#producibility-boundaries-and-the-cache","criteria.html#depth-criteria","criteria.html#measurement-records","criteria.html#the-six-criteria","criteria.html#conservative-verdicts","criteria.html#searching-the-depth","criteria.html#comparing-the-two-curve-criteria","reference-states.html#reference-states","reference-states.html#dicke-states-and-white-noise","reference-states.html#squeezed-states","reference-states.html#decoherence-in-correlation-space","reference-states.html#random-producible-states","reference-states.html#tightness-diagnostics","fluctuating-n.html#fluctuating-particle-number","fluctuating-n.html#the-w-statistic","fluctuating-n.html#pooled-variance","fluctuating-n.html#delta-distributions-reduce-exactly","cli.html#command-line","cli.html#curves","cli.html#producibility-boundaries","cli.html#evaluating-records","cli.html#simulation-sweeps","cli.html#fluctuating-n"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":9,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"14":{"tf":2.449489742783178},"20":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":7,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":4}}}}}}}},"0":{"docs":{},"df":0,"5":{"docs":{"7":{"tf":1.0}},"df":1}},"1":{"docs":{"33":{"tf":1.0}},"df":1},"5":{"docs":{"33":{"tf":1.0}},"df":1}},"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"28":{"tf":1.4142135623730951}},"df":1},"5":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"8":{"tf":1.0}},"df":1}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}},"6":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"7":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"1":{"docs":{"1":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":16,",":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"9":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"7":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"27":{"tf":2.23606797749979},"28":{"tf":1.0},"4":{"tf":2.23606797749979},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"16":{"tf":1.0},"26":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"10":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}}}},"x":{"docs":{"7":{"tf":1.0}},"df":1}},"4":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4},"4":{"docs":{"8":{"tf":1.0}},"df":1},"√":{"docs":{},"df":0,"2":{"docs":{"4":{"tf":1.0}},"df":1}}},"0":{"docs":{"1":{"tf":1.4142135623730951},"16":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"0":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.7320508075688772}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}},"0":{"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":3,"0":{"docs":{"33":{"tf":1.0}},"df":1}},"1":{"docs":{"21":{"tf":1.0}},"df":1}},"³":{"docs":{},"df":0,"–":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0}},"df":1}}}},"·":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1}},"‖":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}}}},"2":{"docs":{"20":{"tf":1.4142135623730951},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7},"5":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2},"7":{"docs":{"29":{"tf":1.0}},"df":1},"9":{"docs":{"30":{"tf":1.0}},"df":1},":":{"docs":{},"df":0,"9":{"docs":{},"df":0,"9":{"docs":{"32":{"tf":1.0}},"df":1}}},"e":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":14,"6":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"−":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,"(":{"docs":{"4":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"²":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"2":{"docs":{"10":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"29":{"tf":1.0},"31":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.0}},"df":1}}}},",":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"…":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"8":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"24":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}},"5":{"docs":{"1":{"tf":1.0}},"df":1}},"0":{"docs":{"31":{"tf":2.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"27":{"tf":1.0}},"df":1}},"0":{"docs":{"31":{"tf":1.4142135623730951}},"df":1}},"4":{"docs":{"28":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{"27":{"tf":1.0}},"df":1}}},"5":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"7":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.0}},"df":1}}},"8":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}},":":{"docs":{},"df":0,"9":{"docs":{},"df":0,"8":{"docs":{"34":{"tf":1.0}},"df":1}}},"j":{"docs":{"12":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}},"df":3,"+":{"docs":{},"df":0,"1":{"docs":{"3":{"tf":1.0}},"df":1}}}},"3":{"docs":{"23":{"tf":2.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0}},"df":1}},"1":{"docs":{"33":{"tf":1.0}},"df":1}},"4":{"docs":{"29":{"tf":1.0},"8":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"28":{"tf":1.4142135623730951}},"df":1}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}},"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"28":{"tf":1.4142135623730951}},"df":1}}},"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"5":{"docs":{"3":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"20":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"3":{"tf":1.0}},"df":1}},"0":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.7320508075688772}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}},"6":{"docs":{"22":{"tf":1.0},"3":{"tf":1.0}},"df":2},"7":{"docs":{"11":{"tf":1.0}},"df":1},"8":{"docs":{"21":{"tf":1.0}},"df":1,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"9":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}}}},"9":{"docs":{"17":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1},"n":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":6}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"28":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":22}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"15":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}},"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"33":{"tf":1.0}},"df":1,"c":{"docs":{"15":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"26":{"tf":1.4142135623730951}},"df":2}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"!":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"v":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"x":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"9":{"tf":1.4142135623730951}},"df":1}}}}},"t":{"docs":{},"df":0,"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"h":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1,"j":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"27":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"33":{"tf":1.0}},"df":1},"i":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}},"df":6}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951}},"df":2}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":2.23606797749979},"27":{"tf":1.7320508075688772},"28":{"tf":1.7320508075688772},"34":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"26":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"29":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"34":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}},"t":{"docs":{"28":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"11":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{"20":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":8,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.7320508075688772},"4":{"tf":1.0},"6":{"tf":1.0}},"df":8},"y":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"22":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"t":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":2}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"1":{"tf":2.0},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"30":{"tf":2.23606797749979},"32":{"tf":2.0},"33":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951}},"df":10,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}}},"p":{"docs":{"28":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"33":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"32":{"tf":1.0},"33":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"33":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":1.0}},"df":7,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"27":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"v":{"docs":{"2":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"32":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":3,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"15":{"tf":1.0},"17":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"25":{"tf":1.0},"28":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":2.0},"29":{"tf":1.0},"32":{"tf":1.7320508075688772},"33":{"tf":1.0},"34":{"tf":1.4142135623730951}},"df":9,"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"17":{"tf":2.0},"2":{"tf":1.4142135623730951},"30":{"tf":2.23606797749979},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951},"34":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":13,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}},"y":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{"3":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"22":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{"25":{"tf":1.0},"28":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"33":{"tf":1.0}},"df":1}},"m":{"docs":{"33":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0},"33":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"28":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.7320508075688772},"34":{"tf":1.0}},"df":9,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"7":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"ᵢ":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"18":{"tf":1.0},"6":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":2.0}},"df":1}}}},"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"26":{"tf":1.0},"8":{"tf":1.0}},"df":9,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":1.0}},"df":1,"0":{"docs":{"17":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}},"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"33":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"k":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0},"7":{"tf":1.0}},"df":2,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"23":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.4142135623730951}},"df":1,"’":{"docs":{"31":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"26":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"12":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0},"32":{"tf":1.0}},"df":2}}},"n":{"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":3,"d":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"16":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"_":{"docs":{"23":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}},"v":{"docs":{"4":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0},"32":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6}}}}},"c":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{"29":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"28":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"f":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"6":{"docs":{},"df":0,"4":{"docs":{"16":{"tf":1.0},"26":{"tf":1.0}},"df":2}},"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}},"j":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}},"√":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}},"’":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}}},"{":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"}":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"l":{"docs":{"27":{"tf":1.0},"8":{"tf":1.0}},"df":2},"s":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{"31":{"tf":1.4142135623730951}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":3},"l":{"docs":{"4":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}},"x":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":2.0}},"df":7}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"28":{"tf":1.0},"34":{"tf":1.4142135623730951}},"df":3}}}}}}},"n":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":22},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"27":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0}},"df":5}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3,"i":{"docs":{"1":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":1.0}},"df":4}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"30":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"1":{"docs":{"12":{"tf":1.0}},"df":1},"2":{"docs":{"12":{"tf":1.4142135623730951}},"df":1},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"9":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}},"j":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"26":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"33":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{"32":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":8}},"p":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":5}},"w":{"docs":{"33":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}},"₁":{"docs":{},"df":0,"\'":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"7":{"tf":1.0}},"df":1}}},"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{"11":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2,"_":{"docs":{"21":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.0}},"df":3},"a":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0},"17":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"32":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"8":{"tf":1.0}},"df":1}}},"v":{"docs":{"4":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"15":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}},"l":{"docs":{},"df":0,"z":{"docs":{"5":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"33":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}},"df":3}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"32":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":7},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"j":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"26":{"tf":1.4142135623730951},"3":{"tf":2.23606797749979},"30":{"tf":1.7320508075688772},"31":{"tf":1.4142135623730951},"34":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19,"(":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}},")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"+":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.0}},"df":1,"−":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"9":{"tf":1.0}},"df":1}}}}},".":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1},"l":{"docs":{"20":{"tf":1.0}},"df":1},"x":{"docs":{"0":{"tf":1.0}},"df":1,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"(":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"z":{"docs":{"0":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"y":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"34":{"tf":1.0}},"df":5,"|":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}},"df":11},"y":{"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":3,"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":2.0},"21":{"tf":1.0},"31":{"tf":1.0}},"df":6}}}},"⟩":{"docs":{},"df":0,"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"²":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"²":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"z":{"docs":{"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"21":{"tf":1.0},"33":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,"²":{"docs":{},"df":0,"]":{"docs":{},"df":0,"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"j":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"k":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":2.449489742783178},"23":{"tf":1.4142135623730951},"26":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.7320508075688772},"32":{"tf":1.4142135623730951},"34":{"tf":1.0}},"df":11,"+":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.0},"33":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"27":{"tf":1.0}},"df":2}}},"j":{"docs":{"12":{"tf":1.0},"15":{"tf":1.7320508075688772},"17":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0}},"df":5,"(":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0}},"df":1}},"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"·":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"−":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"j":{"docs":{},"df":0,"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"δ":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"[":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"j":{"docs":{},"df":0,"y":{"docs":{},"df":0,"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"j":{"docs":{},"df":0,"·":{"docs":{},"df":0,"(":{"docs":{},"df":0,"δ":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"j":{"docs":{},"df":0,"y":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"−":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"30":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"32":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}}},"i":{"docs":{"17":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0},"9":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{"9":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"22":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":3},"s":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}}},"x":{"docs":{"11":{"tf":2.0},"4":{"tf":2.23606797749979},"5":{"tf":2.0},"7":{"tf":1.0}},"df":4,")":{"docs":{},"df":0,"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"j":{"docs":{"6":{"tf":1.0}},"df":1}}}},"²":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"/":{"docs":{},"df":0,"j":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"y":{"docs":{"5":{"tf":1.7320508075688772}},"df":1},"z":{"docs":{"11":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4,"⟩":{"docs":{},"df":0,"/":{"docs":{},"df":0,"j":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"j":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{"22":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0}},"df":4,"(":{"docs":{},"df":0,"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"5":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}}}},"2":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"_":{"docs":{},"df":0,"x":{"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{"25":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":22,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"31":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"p":{"docs":{"12":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"22":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}},"x":{"docs":{"30":{"tf":1.0},"33":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2,"u":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"27":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3},"x":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3},"z":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"28":{"tf":1.0},"8":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"28":{"tf":1.0}},"df":4,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"4":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"12":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"28":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"n":{"docs":{"33":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"11":{"tf":2.0},"7":{"tf":1.0}},"df":3}}},"x":{"docs":{"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.7320508075688772}},"df":14}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"17":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}}}},"v":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{"33":{"tf":1.4142135623730951}},"df":1,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}},"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"25":{"tf":1.7320508075688772},"26":{"tf":2.6457513110645907},"27":{"tf":1.4142135623730951},"28":{"tf":2.449489742783178},"31":{"tf":1.4142135623730951},"33":{"tf":1.4142135623730951}},"df":12,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"δ":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,",":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"y":{"docs":{},"df":0,",":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,",":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"y":{"docs":{},"df":0,",":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"32":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"21":{"tf":1.0}},"df":1},"4":{"docs":{"24":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"k":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"g":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}},"j":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"3":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,"/":{"docs":{},"df":0,"[":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"−":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"j":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}},"·":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"j":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0}},"df":3,"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"24":{"tf":1.7320508075688772}},"df":2}},"·":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"j":{"docs":{},"df":0,"_":{"docs":{},"df":0,"⊥":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"|":{"docs":{},"df":0,"/":{"docs":{},"df":0,"n":{"docs":{},"df":0,"j":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"15":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"33":{"tf":2.23606797749979},"8":{"tf":1.0}},"df":5,"i":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{"1":{"tf":1.7320508075688772},"14":{"tf":2.23606797749979},"27":{"tf":1.4142135623730951},"28":{"tf":1.7320508075688772},"33":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.4142135623730951}},"df":6,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.4142135623730951}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"29":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}},"−":{"docs":{},"df":0,"k":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"(":{"docs":{},"df":0,"δ":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"⟩":{"docs":{},"df":0,"j":{"docs":{},"df":0,"·":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"w":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"⟨":{"docs":{},"df":0,"n":{"docs":{},"df":0,"⟩":{"docs":{},"df":0,"j":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1},"d":{"docs":{"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}},"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"3":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}},"n":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,"c":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"26":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"32":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0}},"df":6,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0},"33":{"tf":1.0}},"df":3,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"30":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},":":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{"33":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0}},"df":3,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":2.0},"12":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.7320508075688772},"3":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0}},"df":8}},"t":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"28":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"33":{"tf":1.0}},"df":1}},"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.4142135623730951},"32":{"tf":1.7320508075688772},"34":{"tf":1.0},"4":{"tf":1.0}},"df":9,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}}}}}}}},"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"31":{"tf":1.0}},"df":2}},"y":{"docs":{"7":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"u":{"docs":{"27":{"tf":1.0}},"df":1,"g":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"33":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":12}}},"o":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"27":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"34":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"33":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}},"t":{"docs":{"32":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.0}},"df":1}}},"e":{"docs":{"10":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":7,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"t":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}}},"q":{"docs":{"27":{"tf":1.4142135623730951}},"df":1,"_":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1,"·":{"docs":{},"df":0,"n":{"docs":{},"df":0,"j":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"g":{"docs":{"32":{"tf":1.0},"34":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}},"r":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0}},"df":1}},"w":{"docs":{"28":{"tf":1.0}},"df":1}},"e":{"docs":{"15":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"7":{"tf":1.0}},"df":1}},"d":{"docs":{"26":{"tf":1.0}},"df":1},"l":{"docs":{"12":{"tf":1.0},"29":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":4},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"26":{"tf":1.0}},"df":1},"z":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":2.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"32":{"tf":2.0},"8":{"tf":1.0}},"df":10,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{"32":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"v":{"docs":{"4":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0},"5":{"tf":1.0}},"df":2,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0},"26":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.7320508075688772},"27":{"tf":1.0},"30":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.0}},"df":7,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"30":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"t":{"docs":{"2":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"27":{"tf":1.0},"32":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"32":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"29":{"tf":1.0}},"df":3}}},"w":{"docs":{"32":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0},"32":{"tf":1.0}},"df":4},"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"s":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}},"df":3},"p":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"df":4}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}},"n":{"docs":{"17":{"tf":2.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0},"2":{"tf":1.0},"28":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0}},"df":10,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"17":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"28":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"2":{"tf":1.0},"25":{"tf":1.4142135623730951},"28":{"tf":1.0},"34":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,",":{"docs":{},"df":0,"n":{"docs":{},"df":0,",":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"j":{"docs":{},"df":0,"y":{"docs":{},"df":0,",":{"docs":{},"df":0,"j":{"docs":{},"df":0,"z":{"docs":{"34":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"26":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"27":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"34":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"29":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0}},"df":7}}},"x":{"docs":{"2":{"tf":1.0}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":2}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"28":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"27":{"tf":1.0}},"df":1}}},"9":{"docs":{},"df":0,"9":{"docs":{"17":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"i":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{"33":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":2.0},"30":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}},"df":12,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.4142135623730951}},"df":8,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"x":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}},"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"2":{"docs":{"28":{"tf":1.0}},"df":1}}}}}},"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":19,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0}},"df":10}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"2":{"tf":1.0},"24":{"tf":1.7320508075688772},"33":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.4142135623730951}},"df":1,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}},"8":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"5":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"4":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"2":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"25":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":17,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"[":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}},"y":{"docs":{"10":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"d":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"30":{"tf":1.0},"32":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"21":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"29":{"tf":1.0}},"df":1}}}},"h":{"docs":{"0":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}},"m":{"docs":{"21":{"tf":1.0},"23":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0},"30":{"tf":1.0},"33":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":5,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"33":{"tf":1.0}},"df":1}}}}}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5,"i":{"docs":{"22":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"24":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"8":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.0}},"df":1}},"k":{"docs":{},"df":0,"e":{"docs":{"30":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"31":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"j":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0},"32":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0},"26":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{"9":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"j":{"docs":{"9":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"7":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":4}}}}}},"g":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}},"p":{"docs":{"29":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"30":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{"11":{"tf":1.0},"15":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"33":{"tf":1.0},"34":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":8}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"26":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}},"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":24,"a":{"docs":{},"df":0,"g":{"docs":{"29":{"tf":1.0}},"df":1}}}},"v":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":3}},"u":{"docs":{"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":2,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{"27":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"j":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":4}},"n":{"docs":{"27":{"tf":1.4142135623730951}},"df":1}},"i":{"docs":{"2":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"df":12}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"27":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"<":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"32":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"u":{"docs":{"33":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"a":{"docs":{"17":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":4}}}}}},"w":{"docs":{"26":{"tf":2.449489742783178}},"df":1,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":3}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"26":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"29":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":2.23606797749979},"8":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":8,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"5":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"g":{"docs":{},"df":0,".":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"23":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"23":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}}},"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{"28":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"²":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}},"z":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"1":{"tf":1.0},"15":{"tf":1.7320508075688772},"30":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"31":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}},"df":6}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951}},"df":6}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"28":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":6}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}},"c":{"docs":{},"df":0,"k":{"docs":{"20":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"32":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"34":{"tf":1.0}},"df":5}}}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}}},"j":{"docs":{"11":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"34":{"tf":1.0}},"df":6}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"34":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0}},"df":3}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"28":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.0}},"df":1}}},"x":{"docs":{"15":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":9},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"33":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"27":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{"26":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"31":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"28":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}},"c":{"docs":{},"df":0,"k":{"docs":{"20":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"32":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"34":{"tf":1.0}},"df":2}}}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"11":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"j":{"docs":{"11":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"34":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"25":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0},"31":{"tf":1.0}},"df":3}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"28":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"33":{"tf":1.0}},"df":1}}},"x":{"docs":{"15":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"z":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}},"df":5},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"33":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}},"w":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"27":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{"26":{"tf":1.0}},"df":1,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"spindepth certifies how many particles of a spin-j ensemble are mutually\\nentangled, using only collective measurements. Experiments on 10³–10¹² cold\\natoms cannot address particles individually, but they can measure the\\ncollective spin components J_x, J_y, J_z — their means, variances and\\nsecond moments. From such a measurement record the library derives the entanglement depth: a state is k-producible when it is a mixture of\\ntensor products of groups of at most k particles, and if no k-producible\\nstate can reproduce the record, at least k+1 particles are mutually\\nentangled. The workhorse comparison is against the boundary functions F_J and G_J:\\nthe minimal x-variance a single spin-J system can have at a fixed\\npolarization (or fixed perpendicular second moment). These are computed\\nonce per group spin J from ground states of small tridiagonal Hamiltonians\\nand cached; every criterion is then a cheap inequality check.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A Dicke-like record — zero variance along x, maximal perpendicular second\\nmoment — is detected as fully entangled: #![allow(unused)] fn main() {\\nuse spindepth::{detect_depth, dicke_moments, CriterionId, CurveCache, CurveConfig, DepthOptions, SpinLength}; let cache = CurveCache::new(CurveConfig::default());\\nlet record = dicke_moments(10, SpinLength::HALF);\\nlet verdict = detect_depth(&record, CriterionId::Nonlinear, &cache, &DepthOptions::default()) .unwrap();\\nassert_eq!(verdict.certified_depth, 10); } A separable record never triggers a detection: #![allow(unused)] fn main() {\\nuse spindepth::{detect_depth, CriterionId, CurveCache, CurveConfig, DepthOptions, MeasurementRecord, SpinLength}; // ten spins fully polarized along z: var_Jx = Nj/2, <Jy²+Jz²> = Nj(Nj+1/2)\\nlet record = MeasurementRecord::new( 10, SpinLength::HALF, 2.5, // (ΔJx)² 0.0, 5.0, // <Jy>, <Jz> 27.5, // <Jy²+Jz²> None, None, None,\\n).unwrap(); let cache = CurveCache::new(CurveConfig::default());\\nfor id in [CriterionId::Nonlinear, CriterionId::SorensenMolmer, CriterionId::Xi2, CriterionId::Duan] { let verdict = detect_depth(&record, id, &cache, &DepthOptions::default()).unwrap(); assert_eq!(verdict.certified_depth, 1);\\n} }","breadcrumbs":"Introduction » Quick start","id":"1","title":"Quick start"},"10":{"body":"convexity_check verifies the monotone derivative and probes whether F_J(X^{1/α}) stays convex for other exponents α. Only α ≤ 2 survives —\\nwhich is precisely why G_J (α = 2) is the strongest convex variable to\\nwork in: #![allow(unused)] fn main() {\\nuse spindepth::{compute_f_curve, convexity_check, CurveConfig, SpinLength}; let f = compute_f_curve(SpinLength::integer(2).unwrap(), &CurveConfig::default()).unwrap();\\nlet report = convexity_check(&f, &[1.5, 2.0, 3.0]);\\nassert!(report.verdict);\\nlet verdicts: Vec<bool> = report.alpha_probes.iter().map(|p| p.convex).collect();\\nassert_eq!(verdicts, vec![true, true, false]); }","breadcrumbs":"Boundary curves » Convexity diagnostics","id":"10","title":"Convexity diagnostics"},"11":{"body":"For half-integer J the one-parameter sweep is blocked: minimizing ⟨Lx²⟩ no\\nlonger minimizes the variance because ⟨Lx⟩ ≠ 0 on the minimizers. A second\\nmultiplier fixes it: each point of F_J becomes a two-parameter search\\nover ground states of H = Lx² − λLz − λ₂Lx, with λ solved against the\\npolarization constraint and λ₂ minimized by golden section. #![allow(unused)] fn main() {\\nuse spindepth::{compute_f_halfinteger, SpinLength}; // a single qubit: F_{1/2}(X) = X²/2 exactly\\nlet v = compute_f_halfinteger(SpinLength::HALF, 0.6).unwrap();\\nassert!((v - 0.18).abs() < 1e-7); }","breadcrumbs":"Boundary curves » Half-integer J","id":"11","title":"Half-integer J"},"12":{"body":"producibility_boundary maps a curve for J = kj into the measured plane\\n(⟨Jy²+Jz²⟩, (ΔJx)²) for N particles, which is how the figures of merit are\\nplotted. CurveCache memoizes curves per (2J, kind, grid hash) in memory\\nand optionally on disk as versioned JSON with lossless reals — a warm rerun\\nperforms no eigensolves at all. #![allow(unused)] fn main() {\\nuse spindepth::{CurveCache, CurveConfig, SpinLength}; let cache = CurveCache::new(CurveConfig::default());\\nlet g1 = cache.get_g(SpinLength::ONE).unwrap();\\nlet g2 = cache.get_g(SpinLength::ONE).unwrap();\\nassert!(std::sync::Arc::ptr_eq(&g1, &g2)); }","breadcrumbs":"Boundary curves » Producibility boundaries and the cache","id":"12","title":"Producibility boundaries and the cache"},"13":{"body":"","breadcrumbs":"Depth criteria » Depth criteria","id":"13","title":"Depth criteria"},"14":{"body":"A MeasurementRecord carries the collective moments of an N-particle\\nspin-j ensemble: (ΔJx)², ⟨Jy⟩, ⟨Jz⟩ and ⟨Jy²+Jz²⟩, optionally extended\\nwith ⟨Jx⟩ and the transverse variances. Construction validates\\nphysicality — variances nonnegative, ⟨Jy²+Jz²⟩ ≤ Nj(Nj+1), |⟨J⟩| ≤ Nj,\\nsecond moment at least the squared polarization — and the same checks run\\non deserialization, so unphysical files are rejected at the door: #![allow(unused)] fn main() {\\nuse spindepth::{MeasurementRecord, SpinLength}; let rec = MeasurementRecord::new( 100, SpinLength::HALF, 0.0, // (ΔJx)² 0.0, 0.0, // <Jy>, <Jz> 50.0 * 51.0, // <Jy²+Jz²> — the physical maximum None, None, None,\\n).unwrap();\\nassert_eq!(rec.nj(), 50.0); // exceeding Nj(Nj+1) is unphysical\\nassert!(MeasurementRecord::new(100, SpinLength::HALF, 0.0, 0.0, 0.0, 50.0 * 51.0 + 1.0, None, None, None).is_err()); }","breadcrumbs":"Depth criteria » Measurement records","id":"14","title":"Measurement records"},"15":{"body":"For a group size k (total group spin J = kj), a k-producible state must\\nsatisfy all of: id inequality needs nonlinear (ΔJx)² ≥ Nj·G_J(X), X = [⟨Jy²+Jz²⟩ − Nj(kj+1)]/[N(N−k)j²] G curve sorensen_molmer (ΔJx)² ≥ Nj·F_J(|⟨J_⊥⟩|/Nj) F curve xi2 ξ² = (kj+1)·2(N−k)j·(ΔJx)²/[⟨Jy²+Jz²⟩ − Nj(kj+1)] ≥ 1 integer kj xi2_sm ξ²_SM = (kj+1)·2Nj·(ΔJx)²/(⟨Jy⟩²+⟨Jz⟩²) ≥ 1 integer kj duan N(k+2)(ΔJx)² ≥ ⟨Jy²+Jz²⟩ − (N/4)(k+2) j = 1/2 qubit_tangent (N−k)/2(ΔJx)² ≥ ⟨Jy²+Jz²⟩ − (N/4)(k+2) j = 1/2 A violation certifies depth ≥ k+1. The linear parameters are the tangents\\nof the two curve criteria at their zero crossing, so a ξ² violation always\\nimplies the corresponding nonlinear violation; likewise qubit_tangent\\n(which is ξ² rearranged for qubits) dominates duan. The nonlinear criterion is only applicable once\\n⟨Jy²+Jz²⟩ ≥ Nj(kj+1) — below that a k-producible state with zero variance\\nexists and the result reports applicable: false rather than clamping: #![allow(unused)] fn main() {\\nuse spindepth::{nonlinear_criterion, xi2, CurveCache, CurveConfig, MeasurementRecord, SpinLength}; let cache = CurveCache::new(CurveConfig::default());\\nlet rec = spindepth::dicke_moments(100, SpinLength::HALF);\\nlet g = cache.get_g(SpinLength::HALF.times(50).unwrap()).unwrap(); let res = nonlinear_criterion(&rec, 50, &g).unwrap();\\nassert!(res.applicable && res.violated);\\nassert!((res.rhs - 25.0).abs() < 1e-9); // Nj·G(1) = 50·(1/2) // the tangent version agrees here: ξ² = 0 for zero variance\\nassert!(xi2(&rec, 50).unwrap().violated); }","breadcrumbs":"Depth criteria » The six criteria","id":"15","title":"The six criteria"},"16":{"body":"Every verdict includes a guard band of 1e-9 on the natural scale: margin\\nis the amount by which the inequality is beaten after subtracting the\\nguard, and violated ⇔ margin > 0. Equality at a boundary therefore counts\\nas not violated — entanglement is never claimed from rounding or\\ninterpolation noise. On the noisy-Dicke family this makes the ξ² verdict\\nflip exactly at the analytic threshold: #![allow(unused)] fn main() {\\nuse spindepth::{noisy_dicke_moments, xi2, SpinLength}; let p_star = 1.0 / 28.0; // threshold for N = 100, j = 1/2, k = 50\\nlet at = |p: f64| xi2(&noisy_dicke_moments(100, SpinLength::HALF, p).unwrap(), 50).unwrap();\\nassert!((at(p_star).lhs - 1.0).abs() < 1e-10);\\nassert!(at(p_star - 1e-9).violated);\\nassert!(!at(p_star + 1e-9).violated); }","breadcrumbs":"Depth criteria » Conservative verdicts","id":"16","title":"Conservative verdicts"},"17":{"body":"detect_depth scans k for the largest violated level and returns certified_depth = k + 1. The curve criteria are nested in k (the k−1\\nboundary lies below the k boundary), so the scan bisects; the linear\\nparameters are cheap and are scanned exhaustively since their verdicts need\\nnot be monotone. At half-integer j, levels with non-integer kj have no\\ninteger-spin curve; the scan screens the single odd candidate past the last\\neven violation with the analytic tilde-G bound, which is valid for any J.\\nThat is how a Dicke record of 100 qubits certifies depth 100 rather\\nthan 99: #![allow(unused)] fn main() {\\nuse spindepth::{detect_depth, dicke_moments, CriterionId, CurveCache, CurveConfig, DepthOptions, SpinLength}; let cache = CurveCache::new(CurveConfig::default());\\nlet verdict = detect_depth( &dicke_moments(100, SpinLength::HALF), CriterionId::Nonlinear, &cache, &DepthOptions::default(),\\n).unwrap();\\nassert_eq!(verdict.max_k_violated, Some(99)); // odd k via tilde-G\\nassert_eq!(verdict.certified_depth, 100); } Setting DepthOptions::half_integer_curves replaces the tilde screen with\\nnumerically computed half-integer curves (tighter, slower); setting linear_scan evaluates every admissible k and additionally asserts the\\nmonotone consistency of the curve criteria.","breadcrumbs":"Depth criteria » Searching the depth","id":"17","title":"Searching the depth"},"18":{"body":"The extended record (with transverse variances) feeds observation3_predicate: when [(ΔJy)² + (ΔJz)²]/Nj > kj(1 − (⟨Jy⟩²+⟨Jz⟩²)/N²j²) + 1 holds, the second-moment argument exceeds the squared polarization, so the\\nnonlinear bound dominates the polarization bound — the regime where\\nunpolarized states (Dicke and friends) are detectable only through the\\nnonlinear criterion.","breadcrumbs":"Depth criteria » Comparing the two curve criteria","id":"18","title":"Comparing the two curve criteria"},"19":{"body":"The states module produces exact collective moments for the states every\\ndepth analysis is benchmarked against. All generators return validated\\nrecords (or full symmetric-state moments), so they plug straight into the\\ncriteria.","breadcrumbs":"Reference states » Reference states","id":"19","title":"Reference states"},"2":{"body":"Spin operators and ground states — the tridiagonal\\nmachinery everything rests on. Boundary curves — computing, bounding and caching F_J and G_J. Depth criteria — records, the six criteria, the depth\\nsearch and its conservative rounding. Reference states — exact moments for Dicke,\\nnoisy, squeezed and random producible states. Fluctuating particle number — pooling shots when N\\nvaries. Command line — the spindepth binary. Everything is deterministic: fixed inputs (and seeds, where sampling is\\ninvolved) give identical outputs, and cached curves are reused\\nbyte-for-byte. The Rust snippets in this guide run as doc-tests, so they\\nstay in lockstep with the API.","breadcrumbs":"Introduction » Where to go next","id":"2","title":"Where to go next"},"20":{"body":"The unpolarized Dicke state |J = Nj, m_x = 0⟩ has (ΔJx)² = 0 and the\\nmaximal perpendicular second moment Nj(Nj+1); mixing it with the maximally\\nmixed state moves both moments affinely: #![allow(unused)] fn main() {\\nuse spindepth::{dicke_moments, noisy_dicke_moments, SpinLength}; let clean = dicke_moments(20, SpinLength::HALF);\\nassert_eq!(clean.var_jx, 0.0);\\nassert_eq!(clean.second_moment_perp, 110.0); // 10·11 // p = 1 is pure white noise: <J_l²> = Nj(j+1)/3 per component\\nlet white = noisy_dicke_moments(20, SpinLength::HALF, 1.0).unwrap();\\nassert!((white.var_jx - 5.0).abs() < 1e-12);\\nassert!((white.second_moment_perp - 10.0).abs() < 1e-12); }","breadcrumbs":"Reference states » Dicke states and white noise","id":"20","title":"Dicke states and white noise"},"21":{"body":"Ground states of H_μ = Jx² − μJz interpolate between the Dicke state\\n(μ = 0) and the fully z-polarized coherent state (μ → ∞). They are solved\\non the symmetric subspace (total spin N/2), so N = 1000 is a 1001-dimensional\\ntridiagonal problem: #![allow(unused)] fn main() {\\nuse spindepth::squeezed_state_moments; let dicke_like = squeezed_state_moments(100, 0.0).unwrap();\\nassert!(dicke_like.moments.var(0) < 1e-8); let polarized = squeezed_state_moments(100, 1e6).unwrap();\\nassert!((polarized.moments.mean[2] - 50.0).abs() < 1e-2); } Along the whole family ⟨Jy²+Jz²⟩ stays between Nj(Nj+1/2) (polarized\\nlimit) and Nj(Nj+1) (Dicke limit) — the Casimir fixes the sum of all three\\nsecond moments.","breadcrumbs":"Reference states » Squeezed states","id":"21","title":"Squeezed states"},"22":{"body":"Fully depolarizing m of the N qubits is evaluated without ever building a\\ndensity matrix: permutation symmetry reduces the state to single-particle\\nmoments and pair correlations, which recombine in O(1). That is what makes\\nN = 1000 sweeps with damaged particles cheap: #![allow(unused)] fn main() {\\nuse spindepth::{decohere_particles, squeezed_state_moments}; let state = squeezed_state_moments(1000, 5.0).unwrap();\\nlet rec = decohere_particles(&state, 10).unwrap();\\nassert_eq!(rec.n, 1000); // particles are mixed, not lost\\nassert!(rec.var_jx > state.moments.var(0)); // noise raises the variance\\nassert!(rec.mean_jz < state.moments.mean[2]); // and shrinks the polarization } For N ≤ 6 the test suite checks this formula against an explicit\\nproduct-space density-matrix channel to 1e-10.","breadcrumbs":"Reference states » Decoherence in correlation space","id":"22","title":"Decoherence in correlation space"},"23":{"body":"random_producible_moments draws one Haar-random pure state per group of a\\npartition and sums the exact group moments (variances are additive over\\ntensor factors). These records are the soundness oracle: a state built\\nk-producible must never violate a level-k criterion. #![allow(unused)] fn main() {\\nuse spindepth::{random_producible_moments, xi2, SpinLength}; // 3 + 2 + 1 qubits: 3-producible by construction\\nlet rec = random_producible_moments(6, SpinLength::HALF, &[3, 2, 1], 42).unwrap();\\nmatch xi2(&rec, 3) { Ok(res) => assert!(!res.violated), Err(_) => {} // below the applicability edge is fine too\\n} }","breadcrumbs":"Reference states » Random producible states","id":"23","title":"Random producible states"},"24":{"body":"tightness_diagnostics reports the neglected quantity\\n𝒳 = Σ_l ⟨(J_x^{(l)})²⟩ for a chosen partition of a symmetric qubit state.\\nSqueezed states keep 𝒳 ≤ Nj/2 (equality for product states), which\\nquantifies how close the second-moment bound is to tight: #![allow(unused)] fn main() {\\nuse spindepth::{squeezed_state_moments, tightness_diagnostics, SymmetricStateMoments}; let polarized = SymmetricStateMoments::z_polarized(8);\\nlet report = tightness_diagnostics(&polarized, &[1; 8]).unwrap();\\nassert!((report.script_x - 2.0).abs() < 1e-12); // Nj/2 = N/4\\nassert!(report.bound_satisfied); let squeezed = squeezed_state_moments(8, 0.0).unwrap();\\nlet report = tightness_diagnostics(&squeezed, &[2; 4]).unwrap();\\nassert!(report.script_x < 2.0); // squeezing pushes 𝒳 below Nj/2 }","breadcrumbs":"Reference states » Tightness diagnostics","id":"24","title":"Tightness diagnostics"},"25":{"body":"Macroscopic ensembles rarely hold N fixed shot to shot. The state is then\\nρ = Σ_N Q_N ρ_N, and the criteria pool the per-N statistics instead of\\nconditioning on a single N (which would waste most of the data).","breadcrumbs":"Fluctuating particle number » Fluctuating particle number","id":"25","title":"Fluctuating particle number"},"26":{"body":"The second-moment criterion generalizes through the operator W = Σ_N (Nj − kj)⁻¹ [J_{y,N}² + J_{z,N}² − Nj(kj+1)·1_N], whose expectation replaces the fixed-N argument: the pooled criterion reads\\n(ΔJx)² ≥ ⟨N⟩j·G_J(⟨W⟩/(⟨N⟩j)), with ⟨W⟩ ≥ 0 required. Every populated bin\\nmust have N > k — a bin at or below k makes W undefined and is a hard\\nerror, never silently dropped. The polarization criterion simply\\nsubstitutes N → ⟨N⟩. #![allow(unused)] fn main() {\\nuse spindepth::{dicke_moments, w_expectation, NBin, ShotEnsemble, SpinLength}; let j = SpinLength::HALF;\\nlet bin = |n: u64, w: f64| { let rec = dicke_moments(n, j); NBin { n, weight: w, var_jx: rec.var_jx, mean_jz: rec.mean_jz, second_moment_perp: rec.second_moment_perp, mean_jx: rec.mean_jx, mean_jy: Some(rec.mean_jy) }\\n};\\nlet ens = ShotEnsemble::from_bins(j, vec![bin(100, 0.5), bin(120, 0.5)]).unwrap(); // Dicke bins contribute Q_N·Nj each, so the criterion argument is exactly 1\\nlet w = w_expectation(&ens, 20).unwrap();\\nassert!((w.mean_w / (ens.mean_n() * j.value()) - 1.0).abs() < 1e-12); // a bin with N ≤ k is refused\\nassert!(w_expectation(&ens, 100).is_err()); }","breadcrumbs":"Fluctuating particle number » The W statistic","id":"26","title":"The W statistic"},"27":{"body":"When every bin reports ⟨Jx⟩ the pooled (ΔJx)² is the total mixture\\nvariance, Σ Q var_N plus the between-bin spread of the means; without the\\nmeans it falls back to the concave lower bound Σ Q var_N. The result\\nrecords which form was used: #![allow(unused)] fn main() {\\nuse spindepth::{NBin, PooledVariance, ShotEnsemble, SpinLength}; let bins = vec![ NBin { n: 10, weight: 0.5, var_jx: 1.0, mean_jz: 0.0, second_moment_perp: 20.0, mean_jx: Some(-1.0), mean_jy: None }, NBin { n: 12, weight: 0.5, var_jx: 1.0, mean_jz: 0.0, second_moment_perp: 24.0, mean_jx: Some(1.0), mean_jy: None },\\n];\\nlet ens = ShotEnsemble::from_bins(SpinLength::HALF, bins).unwrap();\\nlet (var, kind) = ens.pooled_var_jx();\\nassert_eq!(kind, PooledVariance::TotalMixture);\\nassert!((var - 2.0).abs() < 1e-12); // 1.0 within + 1.0 between }","breadcrumbs":"Fluctuating particle number » Pooled variance","id":"27","title":"Pooled variance"},"28":{"body":"A single-bin ensemble is a fixed-N experiment, and the fluctuating\\ncriteria share their arithmetic path with the fixed-N ones, so the\\nreduction is bit-identical — not merely close: #![allow(unused)] fn main() {\\nuse spindepth::{xi2, xi2_fluctuating, MeasurementRecord, NBin, ShotEnsemble, SpinLength}; let rec = MeasurementRecord::new(24, SpinLength::HALF, 0.3, 0.0, 5.0, 40.0, None, None, None).unwrap();\\nlet ens = ShotEnsemble::from_bins(SpinLength::HALF, vec![NBin { n: 24, weight: 1.0, var_jx: 0.3, mean_jz: 5.0, second_moment_perp: 40.0, mean_jx: None, mean_jy: Some(0.0),\\n}]).unwrap(); let fixed = xi2(&rec, 4).unwrap();\\nlet fluct = xi2_fluctuating(&ens, 4).unwrap();\\nassert_eq!(fixed.lhs.to_bits(), fluct.lhs.to_bits()); } Raw per-shot data — joint measurements of N and the spin components — is\\naggregated by ShotEnsemble::from_shots, which bins by N and computes the\\nper-bin sample moments. detect_depth_fluctuating then runs the same depth\\nsearch as the fixed-N path, capped at min(N) − 1.","breadcrumbs":"Fluctuating particle number » Delta distributions reduce exactly","id":"28","title":"Delta distributions reduce exactly"},"29":{"body":"The spindepth binary wires the library into batch workflows. Every\\nsubcommand accepts --format json|csv and --out FILE (stdout by\\ndefault); CSV reals carry 17 significant digits and JSON uses lossless\\nshortest representations, so every number round-trips exactly. Exit codes: 0 success, 2 invalid usage or config, 3 numerical\\nfailure, 4 criterion inapplicable for every requested k.","breadcrumbs":"Command line » Command line","id":"29","title":"Command line"},"3":{"body":"A group of k spin-j particles enters every bound through its total spin\\nJ = kj, treated as a single spin-J system of dimension d = 2J+1. The SpinLength type stores 2J so half-integer spins stay exact: #![allow(unused)] fn main() {\\nuse spindepth::SpinLength; let j = SpinLength::HALF; // one qubit\\nlet group = j.times(5).unwrap(); // five qubits: J = 5/2\\nassert_eq!(group.two_j(), 5);\\nassert_eq!(group.dimension(), 6);\\nassert!(!group.is_integer()); }","breadcrumbs":"Spin operators and ground states » Spin operators and ground states","id":"3","title":"Spin operators and ground states"},"30":{"body":"Compute and cache boundary curves (the JSON output is the cache file\\nformat): spindepth curve --two-j 2,6,10,14,18,22,26,30,34,38 \\\\ --curve-cache ./cache --format csv --out g-curves.csv --two-j takes the doubled spin, so 2,6,…,38 is J = 1, 3, …, 19. The\\nstderr line reports how many curves were actually computed; a warm rerun\\nreports zero and emits byte-identical output. --resolution and --lambda-max tune the sweep; the environment variable SPINDEPTH_CACHE\\noverrides --curve-cache.","breadcrumbs":"Command line » Curves","id":"30","title":"Curves"},"31":{"body":"Boundary data in the (⟨Jy²+Jz²⟩, (ΔJx)²) plane — the nonlinear curve, its\\nξ² tangent line, and (for qubits) Duan’s line: # 20-producibility of 200 qubits\\nspindepth boundary --N 200 --two-j 1 --k 20 --format csv --out fig-main.csv\\n# k-producibility of 20 spin-1 particles\\nspindepth boundary --N 20 --two-j 2 --k 1,5,9,13,17 --format csv --out fig-inset.csv","breadcrumbs":"Command line » Producibility boundaries","id":"31","title":"Producibility boundaries"},"32":{"body":"Records are JSON lines or CSV with header N,two_j,var_Jx,mean_Jx,mean_Jy,mean_Jz,second_moment_perp,var_Jy,var_Jz\\n(the last three columns optional). One result row is emitted per\\n(record, criterion, k); per-record problems go to stderr and the run\\ncontinues. spindepth evaluate --input records.jsonl --criterion all --k-range 1:99 \\\\ --curve-cache ./cache --format csv --out results.csv\\nspindepth depth --input records.jsonl --criterion nonlinear --curve-cache ./cache depth prints one verdict per record: {\\"record\\":0,\\"N\\":100,\\"criterion\\":\\"nonlinear\\",\\"max_k_violated\\":99,\\"certified_depth\\":100}","breadcrumbs":"Command line » Evaluating records","id":"32","title":"Evaluating records"},"33":{"body":"simulate sweeps ground states of H_μ = Jx² − μJz for N qubits over a\\ngeometric μ grid, applies a noise model, and reports both curve criteria —\\nthe depth-versus-squeezing table: spindepth simulate --N 1000 --mu-min 0.01 --mu-max 10000 --points 31 \\\\ --noise decohere:10 --curve-cache ./cache --format csv --out sweep.csv Noise specs: none, a white-noise probability ( 0.05 or p:0.05), or decohere:m to fully depolarize m particles. With noise present the\\nnonlinear criterion keeps certifying growing depth as squeezing increases,\\nwhile the polarization-based depth peaks and collapses — the two columns\\nmake the comparison directly.","breadcrumbs":"Command line » Simulation sweeps","id":"33","title":"Simulation sweeps"},"34":{"body":"Per-shot CSV ( shot_id,N,Jx,Jy,Jz) or pre-binned JSON\\n( {\\"two_j\\":1,\\"bins\\":[{\\"N\\":…,\\"Q\\":…,\\"var_jx\\":…,\\"mean_jz\\":…,\\"second_moment_perp\\":…}]}): spindepth fluctuating --input shots.csv --two-j 1 --criterion nonlinear \\\\ --k-range 2:98 --curve-cache ./cache\\nspindepth fluctuating --input bins.json --two-j 1 --criterion nonlinear --depth","breadcrumbs":"Command line » Fluctuating N","id":"34","title":"Fluctuating N"},"4":{"body":"All variance boundaries come from ground states of H = Lx² − λ·Lz − λ₂·Lx Assembled in the eigenbasis of Lx (states ordered by ascending m), H is\\na real symmetric tridiagonal matrix: Lx² and −λ₂Lx fill the diagonal\\nwith m² − λ₂m, and Lz couples neighbouring m with the ladder element\\n½√(J(J+1) − m(m+1)). A ground state therefore costs O(d) per bisection\\nstep — fine for 2J in the thousands. #![allow(unused)] fn main() {\\nuse spindepth::{squeezing_hamiltonian, SpinLength}; let h = squeezing_hamiltonian(SpinLength::ONE, 1.0, 0.0);\\nassert_eq!(h.diag, vec![1.0, 0.0, 1.0]);\\n// off-diagonals −λ·½√(J(J+1) − m(m+1)) = −1/√2 for J = 1\\nassert!((h.offdiag[0] + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15); } The solver brackets the lowest eigenvalue with a Sturm-sequence bisection\\nand recovers the eigenvector by inverse iteration, checking the residual\\n‖Hv − Ev‖ ≤ 1e-10·‖H‖: #![allow(unused)] fn main() {\\nuse spindepth::{squeezing_ground_state, SpinLength}; let g = squeezing_ground_state(SpinLength::ONE, 1.0, 0.0).unwrap();\\n// lowest root of (1−E)(E² − E − 1) = 0\\nassert!((g.energy - (1.0 - 5.0_f64.sqrt()) / 2.0).abs() < 1e-12);\\nassert!(!g.degenerate); } Degeneracies only appear when every off-diagonal vanishes (λ = 0), where\\nthe matrix is diagonal. Half-integer J is then doubly degenerate and the\\nsolver deterministically reports the m_x = +1/2 branch with the degenerate flag set: #![allow(unused)] fn main() {\\nuse spindepth::{squeezing_ground_state, SpinLength}; let g = squeezing_ground_state(SpinLength::HALF, 0.0, 0.0).unwrap();\\nassert!(g.degenerate);\\nassert_eq!(g.vector, vec![0.0, 1.0]); }","breadcrumbs":"Spin operators and ground states » The squeezing Hamiltonian is tridiagonal","id":"4","title":"The squeezing Hamiltonian is tridiagonal"},"5":{"body":"Because the ground vector is real in the x-basis, its moments reduce to\\nreal quadratic forms, computed in O(d) by xbasis_moments. The means and\\nthe full symmetrized second-moment matrix come back together: #![allow(unused)] fn main() {\\nuse spindepth::spin::xbasis_moments;\\nuse spindepth::{squeezing_ground_state, SpinLength}; let j = SpinLength::integer(4).unwrap();\\nlet g = squeezing_ground_state(j, 2.0, 0.0).unwrap();\\nlet m = xbasis_moments(&g.vector, j).unwrap(); // integer J: the ground state keeps <Lx> = 0 at every λ\\nassert!(m.mean[0].abs() < 1e-10);\\n// Casimir: <Lx² + Ly² + Lz²> = J(J+1)\\nlet total = m.second[0][0] + m.second[1][1] + m.second[2][2];\\nassert!((total - 4.0 * 5.0).abs() < 1e-9); } For small systems (oracles, algebra checks) build_spin_matrices produces\\nthe dense complex Lx, Ly, Lz in either the x- or z-eigenbasis,\\nsatisfying [Lx, Ly] = iLz (and cyclic) to 1e-12; moments evaluates a\\nground state against them when the O(d) fast path is not enough.","breadcrumbs":"Spin operators and ground states » Moments","id":"5","title":"Moments"},"6":{"body":"F_J(X) is the smallest normalized variance (ΔLx)²/J that any spin-J state\\ncan have while its normalized polarization ⟨Lz⟩/J equals X, and G_J(X) = F_J(√X) is the same boundary as a function of ⟨Lz⟩²/J². Data\\nbelow these curves is impossible for the corresponding group size — that is\\nthe whole detection principle.","breadcrumbs":"Boundary curves » Boundary curves","id":"6","title":"Boundary curves"},"7":{"body":"For integer J the minimizers are exactly the ground states of H_λ = Lx² − λLz: λ plays the role of a Lagrange multiplier, and sweeping\\nit traces the curve parametrically, X(λ) = ⟨Lz⟩/J, value(λ) = ⟨Lx²⟩/J.\\nTwo bonuses come with the sweep: the derivative is free: F_J’(X) = λ at the sample generated by λ, so\\nevery sample carries an exact slope; convexity of the curve is inherited from the convexity of the state set,\\nso those slopes must increase monotonically — a built-in sanity check. #![allow(unused)] fn main() {\\nuse spindepth::{compute_f_curve, g_from_f, CurveConfig, SpinLength}; let f = compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap();\\n// J = 1 has a closed form: F_1(X) = (1 − √(1−X²))/2\\nfor s in &f.samples { let exact = 0.5 * (1.0 - (1.0 - s.x * s.x).sqrt()); assert!((s.value - exact).abs() < 1e-9);\\n} let g = g_from_f(&f); // X ↦ X², slopes rescaled by 1/(2X)\\nassert!((g.samples[0].derivative - 0.25).abs() < 1e-15); // G₁\'(0) = 1/(2(J+1)) } The λ grid is seeded geometrically, extended by doubling until X reaches\\nits target, and bisected wherever consecutive X gaps exceed the configured\\nresolution (0.005 by default).","breadcrumbs":"Boundary curves » Sweeping the curve","id":"7","title":"Sweeping the curve"},"8":{"body":"Criteria compare measured variances against Nj·G_J(X), so an interpolator\\nthat overshoots the curve would claim entanglement from interpolation\\nnoise. BoundaryCurve::evaluate therefore returns the supporting-tangent\\nvalue from the bracketing samples: for a convex curve, value(Xᵢ) + derivative(Xᵢ)·(X − Xᵢ) never exceeds the true value. Should\\na sample set ever fail the convexity check, evaluation falls back to the\\nlower convex hull of the samples. Every curve also closes at the coherent endpoint (X, value) = (1, 1/2),\\nexact for all J, so records that saturate the physical bounds (Dicke data)\\nstay in range: #![allow(unused)] fn main() {\\nuse spindepth::{compute_f_curve, g_from_f, CurveConfig, SpinLength}; let g = g_from_f(&compute_f_curve(SpinLength::ONE, &CurveConfig::default()).unwrap());\\nlet exact = 0.5 * (1.0 - (1.0_f64 - 0.75).sqrt()); // G₁(0.75) = 1/4\\nlet lower = g.evaluate(0.75).unwrap();\\nassert!(lower <= exact + 1e-12); // certified lower bound …\\nassert!((lower - exact).abs() < 1e-4); // … and a tight one\\nassert_eq!(g.evaluate(0.0).unwrap(), 0.0);\\nassert!((g.evaluate(1.0).unwrap() - 0.5).abs() < 1e-9);\\nassert!(g.evaluate(1.2).is_err()); // out of range }","breadcrumbs":"Boundary curves » Evaluation never overestimates","id":"8","title":"Evaluation never overestimates"},"9":{"body":"Two closed-form lower bounds on G_J matter in practice. The uncertainty\\nbound tilde_G_J(X) = ½[(J+1) − JX − √((J+1−JX)² − X)] is loose at small X (its slope at zero is 1/(4(J+1))) but becomes tight as\\nX → 1, while the tangent at the origin G_J(X) ≥ X / (2(J+1)) is exactly twice the tilde slope and generates the linear ξ² criteria.\\nBoth sandwich every computed curve: #![allow(unused)] fn main() {\\nuse spindepth::{compute_f_curve, g_from_f, tangent_bound, tilde_g, CurveConfig, SpinLength}; let j = SpinLength::integer(3).unwrap();\\nlet g = g_from_f(&compute_f_curve(j, &CurveConfig::default()).unwrap());\\nfor s in &g.samples { assert!(s.value + 1e-9 >= tilde_g(j, s.x)); assert!(s.value + 1e-9 >= tangent_bound(j, s.x));\\n}\\nassert_eq!(tilde_g(j, 1.0), 0.5); // tight at full polarization }","breadcrumbs":"Boundary curves » Analytic bounds","id":"9","title":"Analytic bounds"}},"docInfo":{"0":{"body":91,"breadcrumbs":2,"title":1},"1":{"body":93,"breadcrumbs":3,"title":2},"10":{"body":44,"breadcrumbs":4,"title":2},"11":{"body":57,"breadcrumbs":5,"title":3},"12":{"body":48,"breadcrumbs":5,"title":3},"13":{"body":0,"breadcrumbs":4,"title":2},"14":{"body":80,"breadcrumbs":4,"title":2},"15":{"body":132,"breadcrumbs":4,"title":2},"16":{"body":70,"breadcrumbs":4,"title":2},"17":{"body":116,"breadcrumbs":4,"title":2},"18":{"body":32,"breadcrumbs":6,"title":4},"19":{"body":22,"breadcrumbs":4,"title":2},"2":{"body":69,"breadcrumbs":3,"title":2},"20":{"body":58,"breadcrumbs":6,"title":4},"21":{"body":63,"breadcrumbs":4,"title":2},"22":{"body":69,"breadcrumbs":5,"title":3},"23":{"body":62,"breadcrumbs":5,"title":3},"24":{"body":57,"breadcrumbs":4,"title":2},"25":{"body":23,"breadcrumbs":6,"title":3},"26":{"body":111,"breadcrumbs":5,"title":2},"27":{"body":84,"breadcrumbs":5,"title":2},"28":{"body":94,"breadcrumbs":7,"title":4},"29":{"body":45,"breadcrumbs":4,"title":2},"3":{"body":49,"breadcrumbs":8,"title":4},"30":{"body":58,"breadcrumbs":3,"title":1},"31":{"body":50,"breadcrumbs":4,"title":2},"32":{"body":55,"breadcrumbs":4,"title":2},"33":{"body":77,"breadcrumbs":4,"title":2},"34":{"body":32,"breadcrumbs":4,"title":2},"4":{"body":145,"breadcrumbs":7,"title":3},"5":{"body":94,"breadcrumbs":5,"title":1},"6":{"body":29,"breadcrumbs":4,"title":2},"7":{"body":109,"breadcrumbs":4,"title":2},"8":{"body":102,"breadcrumbs":5,"title":3},"9":{"body":74,"breadcrumbs":4,"title":2}},"length":35},"lang":"English"}}'));