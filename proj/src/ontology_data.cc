// Copyright 2026 The Mariner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Embedded transcription of the sealit: v1.1 class and property
// hierarchies, plus the CIDOC-CRM entities they reference.

#include "ontology_data.h"

namespace mariner::data {

// One class per line; each leading "- " is one level below the nearest
// shallower line above it.
const char* const kClassHierarchy = R"(
E1 CRM Entity
- E2 Temporal Entity
- - E4 Period
- - - E5 Event
- - - - E7 Activity
- - - - - Voyage
- - - - - Arrival
- - - - - Leaving
- - - - - Passing
- - - - - Loading
- - - - - Unloading
- - - - - De-flagging
- - - - - Discharge
- - - - - Civil Registration
- - - - - Ship Registration
- - - - - E11 Modification
- - - - - - Ship Repair
- - - - - - E12 Production
- - - - - - - Ship Construction
- - - - - Money for Service
- - - - - - Money for Things
- - - - - - Money for Labour
- - - - - - - Crew Payment
- - - - - Teaching Unit
- - - - - - Course
- - - - - - Section
- - - - - Service
- - - - - - Employment
- - - - - E13 Attribute Assignment
- - - - - - Promotion
- - - - - Punishment
- - - - - Recruitment
- E53 Place
- - Country
- E54 Dimension
- - Horsepower
- - Duration
- - Tonnage
- E77 Persistent Item
- - E39 Actor
- - - E74 Group
- - - - Port of Registry
- - E70 Thing
- - - E71 Human-Made Thing
- - - - E24 Physical Human-Made Thing
- - - - - E22 Human-Made Object
- - - - - - Ship
- - - - - - Ammunition
- - - - E28 Conceptual Object
- - - - - E55 Type
- - - - - - Language Capacity
- - - - - - Literacy Status
- - - - - - Navigation Type
- - - - - - Profession
- - - - - - Religion Status
- - - - - - Sex Type
- - - - - - Social Status
- - - - - - Subject
- - - E72 Legal Object
- - - - E90 Symbolic Object
- - - - - E41 Appellation
- - - - - - Ship Name
- - - - - - E42 Identifier
- - - - - - - Ship ID
- - - - - E73 Information Object
- - - - - - E29 Design or Procedure
- - - - - - - Labour Contract
- Legal Object Relationship
- - Ship Ownership Phase
- - - Shareholding
- - Legal Document with Temporal Validity
)";

// CRM classes used as domains/ranges but absent from the tree, and CRM
// multiple-inheritance links the tree does not print. "child < parent".
const char* const kExtraClassLinks = R"(
E18 Physical Thing < E72 Legal Object
E24 Physical Human-Made Thing < E18 Physical Thing
E21 Person < E39 Actor
E63 Beginning of Existence < E5 Event
E12 Production < E63 Beginning of Existence
E52 Time-Span < E1 CRM Entity
E97 Monetary Amount < E54 Dimension
E31 Document < E73 Information Object
E78 Curated Holding < E24 Physical Human-Made Thing
PC0 Typed CRM Property < E1 CRM Entity
E60 Number
E62 String
)";

// label | inverse label | domain | range. Leading "- " marks nesting under
// the nearest shallower row, as in the published property hierarchy. The
// duplicated "has owner" / "has shareholder" rows appear once.
const char* const kPropertyHierarchy = R"(
P1 is identified by | P1i identifies | E1 CRM Entity | E41 Appellation
- has ship ID | ship ID identifies | Ship | Ship ID
P2 has type | P2i is type of | E1 CRM Entity | E55 Type
- has navigation type | is navigation type of | Ship | Navigation Type
- has language capacity | is language capacity of | E21 Person | Language Capacity
- has literacy status | is literacy status of | E21 Person | Literacy Status
- has social status | is social status of | E21 Person | Social Status
- has sex type | is sex type of | E21 Person | Sex Type
- has profession | profession of | E21 Person | Profession
- has religion status | is religion status of | E21 Person | Religion Status
- has subject | is subject of | Teaching Unit | Subject
P9 consists of | P9i forms part of | E4 Period | E4 Period
- consists of leaving | leaving is part of | Voyage | Leaving
- consists of arrival | arrival is part of | Voyage | Arrival
- consists of passing | passing is part of | Voyage | Passing
- consists of loading | loading is part of | Voyage | Loading
- consists of unloading | unloading is part of | Voyage | Unloading
P12 occurred in the presence of | P12i was present at | E63 Beginning of Existence | E77 Persistent Item
- P92 brought into existence | P92i was brought into existence by | E63 Beginning of Existence | E77 Persistent Item
- - P108 has produced | P108i was produced by | E12 Production | E24 Physical Human-Made Thing
- - - constructed | was constructed by | Ship Construction | Ship
- P11 had participant | P11i participated in | E5 Event | E39 Actor
- - P14 carried out by | P14i performed | E7 Activity | E39 Actor
- - - navigated by captain | navigated | Voyage | E39 Actor
- - - registered by | is responsible for registration of | Ship Registration | Port of Registry
- - - money provided by | provided money | Money for Service | E39 Actor
- - - was mediated by | was mediator of | Money for Service | E39 Actor
- - - money provided to | received money | Money for Service | E39 Actor
- - - service provided by | provided service | Service | E39 Actor
- - - - employment provided by | provided employment | Employment | E39 Actor
- - had student | student in | Teaching Unit | E39 Actor
- P31 has modified | P31i was modified by | E11 Modification | E18 Physical Thing
- - repaired | was repaired by | Ship Repair | Ship
- voyage of | voyages | Voyage | Ship
P15 was influenced by | P15i influenced | E7 Activity | E1 CRM Entity
- P17 was motivated by | P17i motivated | E7 Activity | E1 CRM Entity
- - for voyage | motivated payment | Crew Payment | Voyage
P43 has dimension | P43i is dimension of | E70 Thing | E54 Dimension
- has tonnage | is tonnage of | Ship | Tonnage
- has horsepower | is horsepower of | Ship | Horsepower
P46 is composed of | P46i forms part of | E18 Physical Thing | E18 Physical Thing
- has ammunition | is ammunition of | Ship | Ammunition
P90 has value | | E54 Dimension | E60 Number
- has duration value | | Duration | E60 Number
P107i is current or former member of | P107 has current or former member | E39 Actor | E74 Group
- works at | is working place of | E21 Person | E74 Group
P140 assigned attribute to | P140i was attributed by | E13 Attribute Assignment | E1 CRM Entity
- concerned | was promoted by | Promotion | E21 Person
P141 assigned | P141i was assigned by | E13 Attribute Assignment | E1 CRM Entity
- promoted into status type | status type was promoted by | Promotion | Social Status
- promoted into employment position type | employment position type was promoted by | Promotion | Profession
P173 starts before or with the end of | P173i ends after or with the start of | E2 Temporal Entity | E2 Temporal Entity
- P174 starts before the end of | P174i ends after the start of | E2 Temporal Entity | E2 Temporal Entity
- - P175 starts before or with the start of | P175i starts after or with the start of | E2 Temporal Entity | E2 Temporal Entity
- - - started | started by | Recruitment | Employment
- - P184 ends before or with the end of | P184i ends with or after the end of | E2 Temporal Entity | E2 Temporal Entity
- - - ended | ended by | Discharge | Employment
P191 had duration | P191i was duration of | E52 Time-Span | E54 Dimension
- had duration | duration of | E52 Time-Span | Duration
had flag of | was flag of | Ship | Country
has crew number capacity | | Ship | E60 Number
under name | named with | Ship Construction | Ship Name
with ship flag of | is flag of | Ship Registration | Country
with ship ID | ship ID of | Ship Registration | Ship ID
registers | is registered by | Ship Registration | Ship
has owner | is owner of phase | Ship Ownership Phase | E39 Actor
- has shareholder | participates with share | Shareholding | E39 Actor
is ownership phase of | has ownership phase | Ship Ownership Phase | Ship
- is shareholding phase of | has shareholding | Shareholding | Ship
ownership under name | name with ownership | Ship Ownership Phase | Ship Name
is initialized by | initializes | Legal Object Relationship | E5 Event
- ownership is initialized by | initializes ownership | Ship Ownership Phase | Ship Registration
is terminated by | terminates | Legal Object Relationship | E5 Event
- ownership is terminated by | terminates ownership | Ship Ownership Phase | De-flagging
of share | | Shareholding | E60 Number
in time | is time of | Legal Object Relationship | E52 Time-Span
formerly or currently possesses | is formerly or currently possessed by | E39 Actor | Legal Document with Temporal Validity
de-flagging of | de-flagged in | De-flagging | Ship
finally arriving at | is arrival place of | Voyage | E53 Place
starting from | is starting place of | Voyage | E53 Place
destination | is destination of | Voyage | E53 Place
loaded | was loaded by | Loading | E18 Physical Thing
unloaded | was unloaded by | Unloading | E18 Physical Thing
at place | is place of arrival | Arrival | E53 Place
from place | is place of leaving | Leaving | E53 Place
by place | is place of passing by | Passing | E53 Place
through place | is place of passing through | Passing | E53 Place
for service | service of | Money for Service | Service
- for employment | employment from | Money for Labour | Employment
had money value | was price of | Money for Service | E97 Monetary Amount
for employment period | is employment period of | Money for Labour | E52 Time-Span
has been agreed in | is agreement for | Money for Labour | Labour Contract
for thing | thing of | Money for Things | E18 Physical Thing
has first name | | E21 Person | E62 String
has last name | | E21 Person | E62 String
has current age | | E21 Person | E60 Number
with ID | ID of | Civil Registration | E42 Identifier
registers person | person is registered by | Civil Registration | E21 Person
is given to | was punished by | Punishment | E39 Actor
related to | | E21 Person | E21 Person
with number of students | | Teaching Unit | E60 Number
P4 has time-span | P4i is time-span of | E2 Temporal Entity | E52 Time-Span
P7 took place at | P7i witnessed | E4 Period | E53 Place
P74 has current or former residence | P74i is current or former residence of | E39 Actor | E53 Place
P70 documents | P70i is documented in | E31 Document | E1 CRM Entity
P01 has domain | P01i is domain of | PC0 Typed CRM Property | E1 CRM Entity
P02 has range | P02i is range of | PC0 Typed CRM Property | E1 CRM Entity
)";

const char* const kSymmetricProperties = "related to";

// property class | reified property | attribute | attribute range.
// Only the first row is documented with its name; the other three fill the
// registration point and are marked as reconstructed in docs/ontology.md.
const char* const kPropertiesOfProperties = R"(
PC works at | works at | in the role of | Profession
PC navigated by captain | navigated by captain | in the capacity of | Profession
PC had student | had student | with student status | Social Status
PC money provided to | money provided to | as payment type | E55 Type
)";

}  // namespace mariner::data
