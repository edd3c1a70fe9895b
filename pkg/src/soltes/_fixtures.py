"""Fixture data: census graph6 records and figure-transcribed examples.

The four graph6 records are 4-regular connected graphs whose star duals
are deletion-invariant hypergraphs; they ship here verbatim so the
screening pipeline is reproducible offline.  Long records are stored
pre-stripped (the parser also tolerates embedded whitespace).
"""

CENSUS_G6_RECORDS = (
    (
        "IYIYMOre_"
    ),
    (
        "~??~s`IB?oG?_B?@_A??_GC??o??o?@O?A_??O??A???W???S???c??@O???G???"
        "@?@??C????W????K????H????AOG??AO????B?????CA????Ca????E??????o??"
        "???G_????AO?????@_?????@AG?????W??????B???????g?O????G_??????B??"
        "?????BC???????w???????E???????AO???????B????????E_???????@_?????"
        "??AOC???????K????????@g????????B_????????B?????????B_?????????X_"
        "????????F_"
    ),
    (
        "~?@Ss`AA?_C@?A?G?C?@??H??a?G??G_?C??G??@???C?G?G???CG??@@??GG??@"
        "@???A????C???A?@??@?????O????B?????C?????G?????A@?????OG???OC???"
        "??_G????@??????A?C????A?W?O?E???????_??????C??A????O??O????W????"
        "???G???????C?W?G???@???C????A?G??????A?G??????c???????_C???????C"
        "?G???????O?G?????E?????????G?W?C?????O???O?????O???_?????E??????"
        "????O?C???????@_?????????S??????????@??`???????@O??????????G?CC?"
        "????@?@?????????G?O?????????C?@_?O??????A??_@???????_???W???????"
        "O?A?GC??????A_??g?????????W???_???????D?W???????????GCO?????????"
        "?K?D??????????`?@?????????O?OA?????????A?Cc?????????????ACa?????"
        "??????__c"
    ),
    (
        "~?@os`AQ__C@_D?A?@??OOK?@O?@O?@???_??W??I??@G???o???_???O???C?O?"
        "@_???S???@G????W????I????A?????O????B?????Q?????K?????a?????@_??"
        "???K??????_?????@??????@??O???@_?????@G??????E??????AG???????o??"
        "?????o???????S???????C????????_???????E????????c????????S???????"
        "?K????????`?????????W????????@_????????B?????????A?????????@????"
        "??????O??O??????E?????????@G?????????@O?????????@_?????????GO???"
        "???????K??????????@_??????????E???????????I???????????G?????????"
        "??C???????????B???????????@G???????????A_???????????D???????????"
        "?E???????????@@?????????????o????????????E?????????????W????????"
        "?????o?????????????_?????????????O?O???????????C?Q?O?????????@_?"
        "g???????????Q?W????????????S?E????????????S@O????????????K?S????"
        "???????@@???????????????W??????????????@_??????????????B????????"
        "???????B???????????????@O???????????????O?O?????????????CA??????"
        "??????????W????????????????o????????????????o????????????????W??"
        "??????????????E?????????????????O?[??????????????A@@@???????????"
        "????E?K???????????????E?o???????????????B@_????????????????p_???"
        "?????????????Eo?"
    ),
)

# Order-6 example: two triangle hyperedges joined by four cross edges,
# plus the full vertex set.
FIG_EXAMPLE_6 = (
    (0, 5), (1, 5), (2, 3), (2, 4),
    (0, 1, 2), (3, 4, 5),
    (0, 1, 2, 3, 4, 5),
)

# Order-7 example: non-regular (degrees 4 and 6) with a twin triple
# {4,5,6}; two overlapping 3-edges on top, one 3-edge below, full set.
FIG_EXAMPLE_7 = (
    (0, 2), (1, 3),
    (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6),
    (0, 1, 2), (0, 1, 3), (4, 5, 6),
    (0, 1, 2, 3, 4, 5, 6),
)
